"""Equivalent surface charge/current densities on the radiating spheroid.

The jump of the field across the spheroid p = alpha,
dF = F(sigma) - F(-sigma), is carried by surface sources

    j0 = e_p . dF,        j = -i e_p x dF,

complex because they mix electric (real) and magnetic (imaginary) parts.
The jump collapses to tilde coefficients built from the mixed signals
g+- = g(tau-sigma) +- g(tau+sigma), and for the impulse drive (n = 1
Cauchy kernel) the tilde coefficients reduce to rational closed forms in
(sigma, tau): the antenna's impulse response.  The analytically continued
Coulomb field provides the static validation example, including the
classic rigidly-spinning-disk picture of its sources.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    LightConePoleError,
    NearRimError,
    OnBranchCircleError,
    RimSingularityError,
    SubRadiatingError,
)
from .em_fields import _as_pol, _field_core
from .geometry import SourceConfig, frame, spheroid_point
from .harness import fd
from .scalar_wavelet import ScalarWavelet
from .signals import CauchySignal, mixed_signals

__all__ = [
    "TildeTriplet",
    "SurfaceSourceSample",
    "field_jump",
    "tilde_lmn",
    "impulse_tilde_lmn",
    "impulse_surface_sources",
    "phase_sweep_magnetic_fraction",
    "surface_sources_exact",
    "surface_sources_approx",
    "bandpass_response",
    "coulomb_field",
    "coulomb_disk_sources",
    "coulomb_spheroid_sources",
    "disk_charge_velocity",
    "disk_angular_velocity",
    "effective_aperture",
]

DEFAULT_Q_MIN_FRAC = 0.1
LIGHTCONE_TOL = 1e-8


class TildeTriplet(NamedTuple):
    L: np.ndarray
    M: np.ndarray
    N: np.ndarray


@dataclass(frozen=True)
class SurfaceSourceSample:
    """Complex surface charge j0 and current j at a spheroid point.

    Electric parts are the real components, magnetic parts the imaginary
    components.
    """

    position: np.ndarray
    q: np.ndarray
    phi: np.ndarray
    j0: np.ndarray
    j: np.ndarray

    @property
    def j0_electric(self):
        return np.real(self.j0)

    @property
    def j0_magnetic(self):
        return np.imag(self.j0)

    @property
    def j_electric(self):
        return np.real(self.j)

    @property
    def j_magnetic(self):
        return np.imag(self.j)


def _check_rim(q, cfg, q_min):
    if q_min > 0.0 and np.any(np.abs(np.asarray(q, dtype=float)) < q_min):
        raise NearRimError(
            f"|q| < {q_min:g}: inside the rim exclusion band, where the flat-spheroid "
            "approximation and the jump conditions degrade"
        )


def tilde_lmn(sig, sigma, tau) -> TildeTriplet:
    """Jump coefficients from the mixed signals:

    Lt = g..+/s + 3g.-/s^2 + 3g+/s^3, Mt = g..+/s + g.-/s^2 + g+/s^3,
    Nt = g..-/s + g.+/s^2.
    """
    sigma = np.asarray(sigma, dtype=complex)
    tau = np.asarray(tau, dtype=complex)
    if np.any(sigma == 0):
        raise OnBranchCircleError("sigma = 0 in tilde_lmn")
    w = tau**2 - sigma**2
    if np.any(np.abs(w) < LIGHTCONE_TOL * (np.abs(tau) ** 2 + np.abs(sigma) ** 2)):
        raise LightConePoleError("tau = +-sigma: on the light cone of the surface point")
    gp, gm, gp1, gm1, gp2, gm2 = mixed_signals(sig, sigma, tau)
    s1, s2, s3 = sigma, sigma**2, sigma**3
    Lt = gp2 / s1 + 3.0 * gm1 / s2 + 3.0 * gp / s3
    Mt = gp2 / s1 + gm1 / s2 + gp / s3
    Nt = gm2 / s1 + gp1 / s2
    return TildeTriplet(Lt, Mt, Nt)


def impulse_tilde_lmn(sigma, tau) -> TildeTriplet:
    """Closed-form jump coefficients for the impulse drive, w = tau^2 - sigma^2:

    Lt = (15 s^4 t - 10 s^2 t^3 + 3 t^5)/(i pi s^3 w^3)
    Mt = (9 s^4 t - 2 s^2 t^3 + t^5)/(i pi s^3 w^3)
    Nt = (3 s^4 + 6 s^2 t^2 - t^4)/(i pi s^2 w^3)
    """
    s = np.asarray(sigma, dtype=complex)
    t = np.asarray(tau, dtype=complex)
    if np.any(s == 0):
        raise OnBranchCircleError("sigma = 0 in impulse_tilde_lmn")
    w = t**2 - s**2
    if np.any(np.abs(w) < LIGHTCONE_TOL * (np.abs(t) ** 2 + np.abs(s) ** 2)):
        raise LightConePoleError("tau = +-sigma: impulse response is singular on the light cone")
    ipi = 1j * np.pi
    s2, s4 = s**2, s**4
    t2 = t**2
    w3 = w**3
    Lt = (15.0 * s4 * t - 10.0 * s2 * t * t2 + 3.0 * t * t2**2) / (ipi * s * s2 * w3)
    Mt = (9.0 * s4 * t - 2.0 * s2 * t * t2 + t * t2**2) / (ipi * s * s2 * w3)
    Nt = (3.0 * s4 + 6.0 * s2 * t2 - t2**2) / (ipi * s2 * w3)
    return TildeTriplet(Lt, Mt, Nt)


def _surface_geometry(w: ScalarWavelet, q, phi, alpha):
    q = np.asarray(q, dtype=float)
    phi = np.asarray(phi, dtype=float)
    pos = spheroid_point(alpha, q, phi, w.cfg)
    fr = frame(pos, w.cfg)
    return pos, fr


def field_jump(w: ScalarWavelet, pol, q, phi, alpha, t, mu: float = 1.0, nu: float = 1.0,
               q_min: float | None = None):
    """Jump dF = mu*F(sigma) - nu*F(-sigma) across the spheroid p = alpha.

    sigma is the disk-reference branch, continuous across the spheroid.
    Defaults mu = nu = 1 give the branch-cut combination.
    """
    pol = _as_pol(pol)
    if q_min is None:
        q_min = DEFAULT_Q_MIN_FRAC * w.cfg.a_mag
    _check_rim(q, w.cfg, q_min)
    pos, fr = _surface_geometry(w, q, phi, alpha)
    tau = w.tau(t)
    Lt, Mt, Nt = tilde_lmn(w.sig, fr.sigma, tau)
    if mu == 1.0 and nu == 1.0:
        lam = np.sum(fr.u * pol, axis=-1)
        ucp = np.cross(fr.u, np.broadcast_to(pol, fr.u.shape))
        dF = Lt[..., None] * lam[..., None] * fr.u - Mt[..., None] * pol - 1j * Nt[..., None] * ucp
    else:
        if abs(mu + nu - 2.0) > 1e-12:
            raise ValueError("need mu + nu = 2")
        dF = mu * _field_core(w.sig, fr.sigma, fr.u, pol, tau) - nu * _field_core(
            w.sig, -fr.sigma, -fr.u, pol, tau
        )
    return dF, pos, fr


def surface_sources_exact(w: ScalarWavelet, pol, q, phi, alpha, t,
                          q_min: float | None = None) -> SurfaceSourceSample:
    """j0 = e_p . dF and j = -i e_p x dF with the exact outgoing normal e_p."""
    dF, pos, fr = field_jump(w, pol, q, phi, alpha, t, q_min=q_min)
    j0 = np.sum(fr.e_p * dF, axis=-1)
    j = -1j * np.cross(fr.e_p, dF)
    return SurfaceSourceSample(position=pos, q=np.asarray(q, dtype=float),
                               phi=np.asarray(phi, dtype=float), j0=j0, j=j)


def surface_sources_approx(w: ScalarWavelet, pol, q, phi, alpha, t,
                           q_min: float | None = None) -> SurfaceSourceSample:
    """Flat-spheroid (alpha << a) closed forms for the surface sources.

    With s = alpha - i*q on the surface, rho = sqrt(a^2 - q^2), and the
    polarization resolved on the local cylindrical axes,

      s|s| j0 = Lt*a*rho*p_rho + Nt*s*rho*p_phi
      s|s| j  = (Lt*rho^2*p_rho - Mt*s^2*p_rho + Nt*a*s*p_phi) e_phi
              + (Mt*s^2*p_phi + Nt*a*s*p_rho) e_rho.

    Degrades near the rim q = 0, where the normal turns away from the
    axis; the rim band is refused by default.
    """
    pol = _as_pol(pol)
    cfg = w.cfg
    if q_min is None:
        q_min = DEFAULT_Q_MIN_FRAC * cfg.a_mag
    _check_rim(q, cfg, q_min)
    q = np.asarray(q, dtype=float)
    phi = np.asarray(phi, dtype=float)
    a = cfg.a_mag
    pos = spheroid_point(alpha, q, phi, cfg)
    sigma = alpha - 1j * q
    rho = np.sqrt(np.maximum(a**2 - q**2, 0.0))
    e_rho = np.cos(phi)[..., None] * cfg.e1 + np.sin(phi)[..., None] * cfg.e2
    e_phi = -np.sin(phi)[..., None] * cfg.e1 + np.cos(phi)[..., None] * cfg.e2
    p_rho = np.sum(e_rho * pol, axis=-1)
    p_phi = np.sum(e_phi * pol, axis=-1)
    tau = w.tau(t)
    Lt, Mt, Nt = tilde_lmn(w.sig, sigma, tau)
    denom = sigma * np.abs(sigma)
    j0 = (Lt * a * rho * p_rho + Nt * sigma * rho * p_phi) / denom
    jc_phi = (Lt * rho**2 * p_rho - Mt * sigma**2 * p_rho + Nt * a * sigma * p_phi) / denom
    jc_rho = (Mt * sigma**2 * p_phi + Nt * a * sigma * p_rho) / denom
    j = jc_phi[..., None] * e_phi + jc_rho[..., None] * e_rho
    return SurfaceSourceSample(position=pos, q=q, phi=phi, j0=j0, j=j)


def impulse_surface_sources(pol, q, phi, alpha, t, cfg: SourceConfig,
                            q_min: float | None = None) -> SurfaceSourceSample:
    """Antenna impulse response: sources for the delta drive from the closed forms.

    Assembles dF from impulse_tilde_lmn with the exact surface frame, then
    j0 = e_p . dF, j = -i e_p x dF.
    """
    pol = _as_pol(pol)
    if q_min is None:
        q_min = DEFAULT_Q_MIN_FRAC * cfg.a_mag
    _check_rim(q, cfg, q_min)
    q = np.asarray(q, dtype=float)
    phi = np.asarray(phi, dtype=float)
    pos = spheroid_point(alpha, q, phi, cfg)
    fr = frame(pos, cfg)
    tau = np.asarray(t, dtype=float) - 1j * cfg.b
    Lt, Mt, Nt = impulse_tilde_lmn(fr.sigma, tau)
    lam = np.sum(fr.u * pol, axis=-1)
    ucp = np.cross(fr.u, np.broadcast_to(pol, fr.u.shape))
    dF = Lt[..., None] * lam[..., None] * fr.u - Mt[..., None] * pol - 1j * Nt[..., None] * ucp
    j0 = np.sum(fr.e_p * dF, axis=-1)
    j = -1j * np.cross(fr.e_p, dF)
    return SurfaceSourceSample(position=pos, q=q, phi=phi, j0=j0, j=j)


def phase_sweep_magnetic_fraction(w: ScalarWavelet, pol, q, phi, alpha, t, phases,
                                  q_min: float | None = None):
    """Magnetic energy fraction of the sources as the polarization phase turns.

    For each phase, the drive uses exp(i*phase)*pol and the returned
    fraction is sum(|Im j|^2 + |Im j0|^2) / sum(|j|^2 + |j0|^2) over the
    sample set.  Exploratory only; nothing is asserted about a minimum.
    """
    pol = _as_pol(pol)
    out = []
    for ph in np.asarray(phases, dtype=float):
        s = surface_sources_exact(w, np.exp(1j * ph) * pol, q, phi, alpha, t, q_min=q_min)
        mag = np.sum(s.j_magnetic**2) + np.sum(s.j0_magnetic**2)
        tot = np.sum(np.abs(s.j) ** 2) + np.sum(np.abs(s.j0) ** 2)
        out.append(mag / tot)
    return np.asarray(out)


def bandpass_response(n: int, w: ScalarWavelet, pol, q, phi, alpha, t,
                      via_impulse: bool = False, db_step: float | None = None,
                      q_min: float | None = None) -> SurfaceSourceSample:
    """Surface sources for the band-pass drive C_n.

    Directly (default) the wavelet is re-driven with C_n; with
    via_impulse=True the same sources are produced as (-d/db)^(n-1) of
    the impulse response, using C_n = (-d/db)^(n-1) C_1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not via_impulse:
        wn = ScalarWavelet(cut=w.cut, cfg=w.cfg, sig=CauchySignal(n))
        return surface_sources_exact(wn, pol, q, phi, alpha, t, q_min=q_min)
    cfg = w.cfg
    if db_step is None:
        db_step = 1e-4 * abs(cfg.b)

    def impulse_at(b):
        cfg_b = SourceConfig(a=cfg.a, b=b, c=cfg.c)
        w1 = ScalarWavelet(cut=w.cut, cfg=cfg_b, sig=CauchySignal(1))
        s = surface_sources_exact(w1, pol, q, phi, alpha, t, q_min=q_min)
        return np.concatenate([np.atleast_1d(s.j0)[..., None], np.atleast_2d(s.j)], axis=-1)

    if n == 1:
        packed = impulse_at(cfg.b)
    else:
        packed = (-1.0) ** (n - 1) * fd.nth_derivative_param(impulse_at, cfg.b, n - 1, db_step)
    j0 = packed[..., 0]
    j = packed[..., 1:4]
    pos = spheroid_point(alpha, q, phi, cfg)
    return SurfaceSourceSample(position=pos, q=np.asarray(q, dtype=float),
                               phi=np.asarray(phi, dtype=float), j0=j0, j=j)


# --------------------------------------------------------------------------
# The analytically continued Coulomb field: static validation example


def coulomb_field(r, a_vec, cfg: SourceConfig | None = None):
    """C = (r - i a)/(4 pi sigma^3), the Coulomb field of a unit charge at i*a."""
    a_vec = np.asarray(a_vec, dtype=float)
    if cfg is None:
        cfg = SourceConfig(a=a_vec, b=2.0 * np.linalg.norm(a_vec))
    from .geometry import complex_distance_principal

    r = np.asarray(r, dtype=float)
    sigma, _, _ = complex_distance_principal(r, cfg)
    if np.any(np.abs(sigma) < 1e-12 * cfg.a_mag):
        raise OnBranchCircleError("Coulomb field evaluated on the branch circle")
    z = r - 1j * a_vec
    return z / (4.0 * np.pi * sigma**3)[..., None]


def coulomb_disk_sources(rho, a, c: float = 1.0, phi=0.0):
    """Disk-limit electric sources of the continued Coulomb field:

    j0 = -a/(2 pi (a^2-rho^2)^(3/2)), j = -c rho e_phi / (2 pi (a^2-rho^2)^(3/2)).

    The vector j is returned in the frame with the source axis along z and
    e_phi at azimuth phi.  Diverges at the rim rho = a.
    """
    rho = np.asarray(rho, dtype=float)
    if np.any(rho >= a):
        raise RimSingularityError("disk sources diverge at the rim rho = a")
    s3 = (a**2 - rho**2) ** 1.5
    j0 = -a / (2.0 * np.pi * s3)
    jmag = -c * rho / (2.0 * np.pi * s3)
    phi = np.asarray(phi, dtype=float)
    e_phi = np.stack([-np.sin(phi), np.cos(phi), np.zeros_like(phi)], axis=-1)
    j = jmag[..., None] * e_phi
    return j0, j


def disk_charge_velocity(rho, a, c: float = 1.0, phi=0.0):
    """Local charge velocity v = (c rho / a) e_phi of the spinning disk picture."""
    rho = np.asarray(rho, dtype=float)
    phi = np.asarray(phi, dtype=float)
    e_phi = np.stack([-np.sin(phi), np.cos(phi), np.zeros_like(phi)], axis=-1)
    return (c * rho / a)[..., None] * e_phi


def disk_angular_velocity(a, c: float = 1.0):
    """Rigid angular velocity c/a: the rim moves at the speed of light."""
    return c / a


def coulomb_spheroid_sources(alpha, q, phi, cfg: SourceConfig):
    """Surface sources of the Coulomb field on the spheroid p = alpha.

    The interior field of the charged spheroid vanishes (C is odd in
    sigma), so the jump is 2C and j0 = 2 e_p.C, j = -2i e_p x C.  Smooth
    and bounded for alpha > 0; the magnetic (imaginary) parts die as
    alpha -> 0 on the disk interior.
    """
    q = np.asarray(q, dtype=float)
    phi = np.asarray(phi, dtype=float)
    pos = spheroid_point(alpha, q, phi, cfg)
    fr = frame(pos, cfg)
    C = pos - 1j * cfg.a
    C = C / (4.0 * np.pi * fr.sigma**3)[..., None]
    dC = 2.0 * C
    j0 = np.sum(fr.e_p * dC, axis=-1)
    j = -1j * np.cross(fr.e_p, dC)
    return SurfaceSourceSample(position=pos, q=q, phi=phi, j0=j0, j=j)


def effective_aperture(omega, a, c: float = 1.0):
    """(q_min, rho_max) of the disk zone that radiates at frequency omega.

    q >= 1/k with k = omega/c, i.e. rho <= sqrt(a^2 - 1/k^2); requires
    k*a > 1, lower frequencies drive mostly a reactive near field.
    """
    k = omega / c
    if not k * a > 1.0:
        raise SubRadiatingError("k*a <= 1: no effective aperture, field is reactive")
    q_min = 1.0 / k
    return q_min, np.sqrt(a**2 - q_min**2)
