"""Dataset-producing runs shared by the CLI and the validation suites."""

from __future__ import annotations

import numpy as np

from ..em_fields import field, helicity_residual
from ..geometry import SourceConfig, complex_distance_principal, cut_sign
from ..scalar_wavelet import ScalarWavelet, psi
from ..signals import CauchySignal, diffraction_angle, spectral_profile
from ..surface_sources import impulse_surface_sources, surface_sources_exact
from .beam import beam_profile_rows, measure_diffraction_angle, measure_spectral_profile
from .config import RunConfig
from .grids import chunked_parallel_map, grid_points

__all__ = [
    "field_rows",
    "FIELD_HEADER_PSI",
    "FIELD_HEADER_F",
    "source_sweep_rows",
    "SOURCE_HEADER",
    "beam_profile_data",
]

FIELD_HEADER_PSI = ["x", "y", "z", "t", "re_sigma", "im_sigma", "cut_sign", "re_psi", "im_psi"]
FIELD_HEADER_F = [
    "x", "y", "z", "t", "re_sigma", "im_sigma", "cut_sign",
    "re_Fx", "im_Fx", "re_Fy", "im_Fy", "re_Fz", "im_Fz",
]
SOURCE_HEADER = [
    "q", "phi", "x", "y", "z",
    "re_j0", "im_j0", "re_jx", "im_jx", "re_jy", "im_jy", "re_jz", "im_jz",
    "in_rim_band",
]


def field_rows(rc: RunConfig, threads: int = 1):
    """Row-major field sweep: one record per (point, time), time fastest."""
    w = rc.wavelet()
    pol = rc.polarization()
    pts, ts = grid_points(rc.grid)

    def eval_chunk(chunk):
        sigma0, _, _ = complex_distance_principal(chunk, w.cfg)
        sgn = cut_sign(w.cut, chunk, w.cfg, tol_cut=rc.tol_cut * w.cfg.a_mag)
        sigma = sgn * sigma0
        blocks = []
        for tt in ts:
            base = np.column_stack(
                [chunk, np.full(len(chunk), tt), sigma.real, sigma.imag, np.asarray(sgn, dtype=float)]
            )
            if rc.quantity == "psi":
                v = psi(w, chunk, tt)
                data = np.column_stack([v.real, v.imag])
            else:
                F = field(w, pol, chunk, tt).F
                data = np.column_stack(
                    [F[:, 0].real, F[:, 0].imag, F[:, 1].real, F[:, 1].imag, F[:, 2].real, F[:, 2].imag]
                )
            blocks.append(np.column_stack([base, data]))
        stacked = np.stack(blocks, axis=1)  # (m, T, k)
        return stacked.reshape(len(chunk) * len(ts), -1)

    return chunked_parallel_map(eval_chunk, pts, threads=threads)


def source_sweep_rows(rc: RunConfig, impulse: bool = False):
    """Surface sweep of the equivalent sources on the spheroid p = alpha.

    Rim-band rows are annotated via the last column, never dropped.
    """
    cfg = rc.source
    a = cfg.a_mag
    alpha = rc.surface_alpha
    if not alpha > 0.0:
        raise ValueError(
            "surface alpha must be positive; for the alpha = 0 disk use the "
            "Coulomb disk source routines"
        )
    pol = rc.polarization()
    q_min = rc.q_min_value()
    qs = np.linspace(-0.98 * a, 0.98 * a, rc.surface_nq)
    phis = np.linspace(0.0, 2 * np.pi, rc.surface_nphi, endpoint=False)
    Q, P = np.meshgrid(qs, phis, indexing="ij")
    qf, pf = Q.ravel(), P.ravel()
    t = rc.surface_t
    if impulse:
        s = impulse_surface_sources(pol, qf, pf, alpha, t, cfg, q_min=0.0)
    else:
        w = rc.wavelet()
        s = surface_sources_exact(w, pol, qf, pf, alpha, t, q_min=0.0)
    in_rim = (np.abs(qf) < q_min).astype(float)
    rows = np.column_stack(
        [
            qf, pf, s.position[:, 0], s.position[:, 1], s.position[:, 2],
            s.j0.real, s.j0.imag,
            s.j[:, 0].real, s.j[:, 0].imag,
            s.j[:, 1].real, s.j[:, 1].imag,
            s.j[:, 2].real, s.j[:, 2].imag,
            in_rim,
        ]
    )
    meta = {
        "a": cfg.a,
        "b": cfg.b,
        "c": cfg.c,
        "alpha": alpha,
        "n": "impulse" if impulse else (rc.signal_n if rc.signal_kind == "cauchy" else "sampled"),
        "pol_re": np.real(pol),
        "pol_im": np.imag(pol),
        "t": t,
        "q_min": q_min,
        "columns": SOURCE_HEADER,
    }
    return rows, meta


def beam_profile_data(rc: RunConfig, n_theta: int = 13, R_factor: float = 1000.0):
    """Predicted vs measured beam table plus summary diagnostics."""
    cfg = rc.source
    a = cfg.a_mag
    if rc.signal_kind != "cauchy":
        raise ValueError("beam profile is defined for the band-pass kernels")
    n = rc.signal_n
    thetas = np.linspace(0.0, np.pi, n_theta)
    R = R_factor * a
    rows = beam_profile_rows(n, cfg, thetas, R)
    th_pred = diffraction_angle(1.0, n, a, cfg.b, cfg.c)
    th_meas = measure_diffraction_angle(CauchySignal(n), cfg, 1.0, R)
    prof = spectral_profile(n, cfg.b)
    c_meas, w_meas = measure_spectral_profile(n, cfg.b)
    w = rc.wavelet()
    pol = rc.polarization()
    dirv = np.sin(0.4) * cfg.e1 + np.cos(0.4) * cfg.a_hat
    summary = {
        "n": n,
        "theta_beta_predicted": th_pred,
        "theta_beta_measured": float(th_meas),
        "spectral_center_predicted": prof.center,
        "spectral_center_measured": float(c_meas),
        "spectral_width_predicted": prof.width,
        "spectral_width_measured": float(w_meas),
        "helicity_residual_10a": float(helicity_residual(w, pol, 10 * a * dirv, 10 * a / cfg.c)),
        "helicity_residual_100a": float(helicity_residual(w, pol, 100 * a * dirv, 100 * a / cfg.c)),
    }
    return rows, summary
