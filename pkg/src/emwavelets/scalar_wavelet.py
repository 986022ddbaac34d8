"""The scalar pulsed-beam wavelet psi = g(tau - sigma)/sigma.

With sigma the branched complex distance and g an analytic-signal pulse,
psi solves the wave equation everywhere off the branch cut; its source is
a distribution supported on the cut.  The sigma-symmetrized combination
psi(sigma) + psi(-sigma) is sourceless (the two branches form a
source-sink pair) and single-valued, which is what fills the interior of
the spheroidal antenna.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OnBranchCircleError, TooCloseToCutError
from .geometry import BranchCut, SourceConfig, complex_distance, cut_clearance
from .signals import DrivingSignal

__all__ = ["ScalarWavelet", "psi", "psi_sigma_derivs", "interior_psi", "wave_residual"]

SIGMA_GUARD = 1e-8


@dataclass(frozen=True)
class ScalarWavelet:
    """A branch cut, a complex source, and a driving pulse."""

    cut: BranchCut
    cfg: SourceConfig
    sig: DrivingSignal

    def tau(self, t):
        return np.asarray(t, dtype=float) - 1j * self.cfg.b

    def sigma(self, r):
        return complex_distance(self.cut, r, self.cfg)


def _guard_sigma(sigma, cfg):
    if np.any(np.abs(sigma) < SIGMA_GUARD * cfg.a_mag):
        raise OnBranchCircleError("sigma too close to zero (branch circle)")


def psi(w: ScalarWavelet, r, t):
    """Retarded wavelet g(tau - sigma)/sigma at field point r, time t."""
    sigma = w.sigma(r)
    _guard_sigma(sigma, w.cfg)
    return w.sig.eval(w.tau(t) - sigma) / sigma


def psi_sigma_derivs(w: ScalarWavelet, r, t):
    """(psi, d(psi)/d(sigma), d2(psi)/d(sigma)2) at (r, t).

    psi' = -g./sigma - g/sigma^2 and psi'' = g../sigma + 2g./sigma^2
    + 2g/sigma^3, with g, g., g.. the retarded signal and its time
    derivatives.
    """
    sigma = w.sigma(r)
    _guard_sigma(sigma, w.cfg)
    tau = w.tau(t)
    g = w.sig.eval(tau - sigma)
    g1 = w.sig.eval(tau - sigma, 1)
    g2 = w.sig.eval(tau - sigma, 2)
    value = g / sigma
    d1 = -g1 / sigma - g / sigma**2
    d2 = g2 / sigma + 2.0 * g1 / sigma**2 + 2.0 * g / sigma**3
    return value, d1, d2


def interior_psi(w: ScalarWavelet, r, t):
    """Sourceless interior combination [g(tau-sigma) - g(tau+sigma)]/sigma.

    Even under sigma -> -sigma, hence single-valued across any cut; tends
    to -2*g.(tau) on the branch circle.
    """
    sigma = w.sigma(r)
    _guard_sigma(sigma, w.cfg)
    tau = w.tau(t)
    return (w.sig.eval(tau - sigma) - w.sig.eval(tau + sigma)) / sigma


def wave_residual(w: ScalarWavelet, r, t, h: float | None = None, order: int = 4, interior: bool = False):
    """Central-difference wave-operator residual of psi (or the interior combination).

    Off the cut the residual vanishes as O(h^order); near the cut the
    stencil is refused.
    """
    from .harness.fd import dalembertian

    if h is None:
        h = 1e-3 * w.cfg.a_mag
    r = np.asarray(r, dtype=float)
    margin = (2 if order == 2 else 4) * h
    if not interior and np.any(cut_clearance(w.cut, r, w.cfg) <= margin):
        raise TooCloseToCutError("stencil would straddle the branch cut")
    f = (lambda rr, tt: interior_psi(w, rr, tt)) if interior else (lambda rr, tt: psi(w, rr, tt))
    return dalembertian(f, r, t, h, order=order)
