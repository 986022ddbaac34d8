"""Complex distance from an imaginary source point and its branch structure.

The distance from the displaced point i*a to a real field point r is
sigma = sqrt((r - i a).(r - i a)) = p - i q.  Level sets of p are oblate
spheroids confocal with the circle C = {|r| = a, a.r = 0} where sigma
vanishes; level sets of q are the orthogonal hyperboloids.  sigma is
double-valued on R^3 - C and a branch cut (a membrane spanning C) must be
chosen to make it single-valued.  This module provides the principal
branch (flat-disk cut, p >= 0), the standard cut families with their sign
rules, the coordinate transforms, and the gradient/unit-vector frame.

Conventions: vectors are ndarrays with shape (..., 3); scalar results
broadcast over the leading axes.  On the disk itself the principal branch
takes the limit from the a.r > 0 side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np

from .errors import OnBranchCircleError, OnCutError

__all__ = [
    "SourceConfig",
    "OblateCoords",
    "ComplexDistanceSample",
    "BranchCut",
    "FlatDisk",
    "UpperSpheroid",
    "LowerSpheroid",
    "SmoothSpheroid",
    "CustomCut",
    "complex_distance_principal",
    "complex_distance",
    "cut_sign",
    "cut_clearance",
    "continued_sign",
    "to_oblate",
    "from_oblate",
    "spheroid_point",
    "spheroid_area_element",
    "smooth_cut_function",
    "frame",
    "on_reference_cut",
    "branch_circle_distance",
]

_AXIS_TOL = 0.9


def _dot(u, v):
    return np.sum(u * v, axis=-1)


def _norm(v):
    return np.sqrt(np.sum(np.real(v) ** 2 + np.imag(v) ** 2, axis=-1))


@dataclass(frozen=True)
class SourceConfig:
    """Imaginary source displacement a, imaginary time b, propagation speed c.

    Requires |a| > 0 (the branch circle must not degenerate to a point)
    and c*|b| > |a| so that pulses built on this source are defined
    everywhere.
    """

    a: np.ndarray
    b: float
    c: float = 1.0

    def __post_init__(self):
        a = np.asarray(self.a, dtype=float)
        if a.shape != (3,):
            raise ValueError("a must be a 3-vector")
        object.__setattr__(self, "a", a)
        a_mag = float(np.linalg.norm(a))
        if not a_mag > 0.0:
            raise ValueError("|a| must be positive; a real point source has no branch circle")
        if not self.c > 0.0:
            raise ValueError("propagation speed c must be positive")
        if not self.c * abs(self.b) > a_mag:
            raise ValueError("need c*|b| > |a| for globally defined pulses")
        object.__setattr__(self, "a_mag", a_mag)
        a_hat = a / a_mag
        # deterministic transverse basis (e1, e2, a_hat)
        ref = np.array([1.0, 0.0, 0.0]) if abs(a_hat[0]) < _AXIS_TOL else np.array([0.0, 1.0, 0.0])
        e1 = ref - np.dot(ref, a_hat) * a_hat
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(a_hat, e1)
        object.__setattr__(self, "a_hat", a_hat)
        object.__setattr__(self, "e1", e1)
        object.__setattr__(self, "e2", e2)

    a_mag: float = field(init=False)
    a_hat: np.ndarray = field(init=False)
    e1: np.ndarray = field(init=False)
    e2: np.ndarray = field(init=False)


class OblateCoords(NamedTuple):
    p: np.ndarray
    q: np.ndarray
    phi: np.ndarray


@dataclass(frozen=True)
class ComplexDistanceSample:
    """Principal-branch sigma with its gradient frame at a field point."""

    sigma: np.ndarray
    p: np.ndarray
    q: np.ndarray
    grad_p: np.ndarray
    grad_q: np.ndarray
    u: np.ndarray
    e_p: np.ndarray
    e_q: np.ndarray


def complex_distance_principal(r, cfg: SourceConfig):
    """Principal branch of sigma(r - i a), flat disk as reference cut.

    Returns (sigma, p, q) with sigma = p - i q and p >= 0.  On the disk
    (p = 0) the value is the limit from the a.r > 0 face, q >= 0.
    """
    r = np.asarray(r, dtype=float)
    adotr = _dot(r, cfg.a)
    sigma2 = _dot(r, r) - cfg.a_mag**2 - 2j * adotr
    sigma = np.sqrt(sigma2)
    # Exactly-real negative sigma^2 (a.r == 0 inside the circle): take the
    # a.r -> 0+ face so that sigma = -i*sqrt(a^2 - rho^2).
    on_disk = (sigma2.imag == 0.0) & (sigma2.real < 0.0)
    if np.any(on_disk):
        fixed = -1j * np.sqrt(-np.real(sigma2))
        sigma = np.where(on_disk, fixed, sigma)
    return sigma, np.real(sigma), -np.imag(sigma)


def on_reference_cut(r, cfg: SourceConfig, tol: float | None = None):
    """True where r lies on the flat-disk reference cut (within tol)."""
    r = np.asarray(r, dtype=float)
    if tol is None:
        tol = 1e-9 * cfg.a_mag
    z = _dot(r, cfg.a_hat)
    rho = _norm(r - z[..., None] * cfg.a_hat)
    return (np.abs(z) <= tol) & (rho <= cfg.a_mag)


def branch_circle_distance(r, cfg: SourceConfig):
    """Euclidean distance from r to the branch circle."""
    r = np.asarray(r, dtype=float)
    z = _dot(r, cfg.a_hat)
    rho = _norm(r - z[..., None] * cfg.a_hat)
    return np.hypot(rho - cfg.a_mag, z)


def to_oblate(r, cfg: SourceConfig) -> OblateCoords:
    """Oblate spheroidal coordinates (p, q, phi) of the principal branch."""
    r = np.asarray(r, dtype=float)
    _, p, q = complex_distance_principal(r, cfg)
    z = _dot(r, cfg.a_hat)
    rho_vec = r - z[..., None] * cfg.a_hat
    phi = np.mod(np.arctan2(_dot(rho_vec, cfg.e2), _dot(rho_vec, cfg.e1)), 2.0 * np.pi)
    return OblateCoords(p, q, phi)


def from_oblate(p, q, phi, cfg: SourceConfig, side: str = "upper"):
    """Cartesian point with coordinates (p, |q|, phi); side picks the sign of a.r.

    The pair (p, q) determines the point only up to the twofold cover;
    side = "upper" places it on the a.r >= 0 sheet, "lower" on the other.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    phi = np.asarray(phi, dtype=float)
    a = cfg.a_mag
    if np.any(np.abs(q) > a * (1.0 + 1e-12)):
        raise ValueError("|q| must not exceed |a|")
    q = np.clip(q, -a, a)
    if side not in ("upper", "lower"):
        raise ValueError("side must be 'upper' or 'lower'")
    zmag = p * np.abs(q) / a
    z = zmag if side == "upper" else -zmag
    rho = np.sqrt((p**2 + a**2) * (a**2 - q**2)) / a
    e_rho = np.cos(phi)[..., None] * cfg.e1 + np.sin(phi)[..., None] * cfg.e2
    return rho[..., None] * e_rho + z[..., None] * cfg.a_hat


def spheroid_point(alpha, q, phi, cfg: SourceConfig):
    """Point of the spheroid p = alpha at surface coordinates (q, phi).

    The sign of q selects the hemisphere: a.r = alpha*q.
    """
    alpha = np.asarray(alpha, dtype=float)
    q = np.asarray(q, dtype=float)
    phi = np.asarray(phi, dtype=float)
    a = cfg.a_mag
    if np.any(np.abs(q) > a * (1.0 + 1e-12)):
        raise ValueError("|q| must not exceed |a|")
    q = np.clip(q, -a, a)
    z = alpha * q / a
    rho = np.sqrt((alpha**2 + a**2) * (a**2 - q**2)) / a
    e_rho = np.cos(phi)[..., None] * cfg.e1 + np.sin(phi)[..., None] * cfg.e2
    return rho[..., None] * e_rho + z[..., None] * cfg.a_hat


def spheroid_area_element(alpha, q, cfg: SourceConfig):
    """Area element dA/(dq dphi) of the spheroid p = alpha at coordinate q."""
    alpha = float(alpha)
    q = np.asarray(q, dtype=float)
    a = cfg.a_mag
    rho = np.sqrt((alpha**2 + a**2) * (a**2 - q**2)) / a
    drho_dq = -q * (alpha**2 + a**2) / (a**2 * np.maximum(rho, 1e-300))
    dz_dq = alpha / a
    h_q = np.hypot(drho_dq, dz_dq)
    return h_q * rho


def smooth_cut_function(q, alpha, eps):
    """Smoothed step alpha*X_eps(q), X_eps(q) = (1/pi) Im ln((eps+iq)/(eps-iq)).

    Odd in q and -> alpha*sgn(q) as eps -> 0.
    """
    if eps <= 0.0:
        raise ValueError("eps must be positive")
    q = np.asarray(q, dtype=float)
    return alpha * (2.0 / np.pi) * np.arctan(q / eps)


# --------------------------------------------------------------------------
# Branch cuts


@dataclass(frozen=True)
class BranchCut:
    """Base class; concrete cuts implement the induced sign rule."""

    def sign(self, r, cfg: SourceConfig):
        raise NotImplementedError

    def cut_function(self, q, phi):
        """Cut membrane as p = chi(q, phi) on the double cover (odd in q)."""
        raise NotImplementedError

    def clearance(self, r, cfg: SourceConfig):
        """Lower estimate of the Euclidean distance from r to the cut."""
        r = np.asarray(r, dtype=float)
        d_circle = branch_circle_distance(r, cfg)
        _, p, q = complex_distance_principal(r, cfg)
        phi = to_oblate(r, cfg).phi
        chi = np.asarray(self.cut_function(np.abs(q), phi), dtype=float)
        # metric distance ~ coordinate residual / |grad p|
        scale = np.sqrt((p**2 + q**2) / (p**2 + cfg.a_mag**2))
        d_surface = np.abs(p - chi) * scale
        # the membrane lives on the q > 0 sheet; from the other sheet the
        # nearest part of the cut is its boundary circle
        d_surface = np.where(q >= 0.0, d_surface, np.inf)
        return np.minimum(d_surface, d_circle)


@dataclass(frozen=True)
class FlatDisk(BranchCut):
    """Degenerate spheroid S_0: the reference cut of the principal branch."""

    def sign(self, r, cfg):
        r = np.asarray(r, dtype=float)
        return np.ones(r.shape[:-1], dtype=int)

    def cut_function(self, q, phi):
        return np.zeros_like(np.asarray(q, dtype=float))

    def clearance(self, r, cfg):
        r = np.asarray(r, dtype=float)
        z = _dot(r, cfg.a_hat)
        rho = _norm(r - z[..., None] * cfg.a_hat)
        inside = rho <= cfg.a_mag
        return np.where(inside, np.abs(z), np.hypot(rho - cfg.a_mag, z))


def _spheroid_sign(r, cfg, alpha, upper: bool):
    r = np.asarray(r, dtype=float)
    _, p, _ = complex_distance_principal(r, cfg)
    zside = _dot(r, cfg.a_hat)
    inside = (p < alpha) & ((zside > 0.0) if upper else (zside < 0.0))
    return np.where(inside, -1, 1)


def _apron_distance(r, cfg, alpha):
    """Distance to the flat annulus bridging the circle and the half spheroid."""
    r = np.asarray(r, dtype=float)
    a = cfg.a_mag
    z = _dot(r, cfg.a_hat)
    rho = _norm(r - z[..., None] * cfg.a_hat)
    lo, hi = a, math.hypot(a, alpha)
    dr = np.maximum(np.maximum(lo - rho, rho - hi), 0.0)
    return np.hypot(dr, z)


def _half_spheroid_clearance(r, cfg, alpha, upper: bool, with_apron: bool):
    """Distance to the half spheroid p = alpha (a.r >= 0 part) plus apron."""
    r = np.asarray(r, dtype=float)
    a = cfg.a_mag
    z = _dot(r, cfg.a_hat)
    if not upper:
        z = -z
    rho = _norm(r - _dot(r, cfg.a_hat)[..., None] * cfg.a_hat)
    # polyline over the meridian curve of the half spheroid
    qs = a * np.sin(np.linspace(0.0, np.pi / 2, 257))
    rc = np.sqrt((alpha**2 + a**2) * (a**2 - qs**2)) / a
    zc = alpha * qs / a
    if with_apron:
        rc = np.concatenate([np.linspace(a, math.hypot(a, alpha), 17), rc])
        zc = np.concatenate([np.zeros(17), zc])
    d = np.min(np.hypot(rho[..., None] - rc, z[..., None] - zc), axis=-1)
    return d


@dataclass(frozen=True)
class UpperSpheroid(BranchCut):
    """Half spheroid p = alpha on the a.r > 0 side, closed by the flat apron."""

    alpha: float

    def __post_init__(self):
        if not self.alpha > 0.0:
            raise ValueError("alpha must be positive")

    def sign(self, r, cfg):
        return _spheroid_sign(r, cfg, self.alpha, upper=True)

    def cut_function(self, q, phi):
        return self.alpha * np.sign(np.asarray(q, dtype=float))

    def clearance(self, r, cfg):
        # polyline catches the global geometry; the coordinate residual and
        # the analytic apron distance resolve exactly-on-cut points the
        # polyline sampling cannot
        poly = _half_spheroid_clearance(r, cfg, self.alpha, upper=True, with_apron=True)
        d = np.minimum(poly, BranchCut.clearance(self, r, cfg))
        return np.minimum(d, _apron_distance(r, cfg, self.alpha))


@dataclass(frozen=True)
class LowerSpheroid(BranchCut):
    """Mirror image of UpperSpheroid on the a.r < 0 side."""

    alpha: float

    def __post_init__(self):
        if not self.alpha > 0.0:
            raise ValueError("alpha must be positive")

    def sign(self, r, cfg):
        return _spheroid_sign(r, cfg, self.alpha, upper=False)

    def cut_function(self, q, phi):
        return -self.alpha * np.sign(np.asarray(q, dtype=float))

    def clearance(self, r, cfg):
        # mirror through the disk plane and reuse the upper-cut estimate
        r = np.asarray(r, dtype=float)
        z = _dot(r, cfg.a_hat)
        mirrored = r - 2.0 * z[..., None] * cfg.a_hat
        return UpperSpheroid(self.alpha).clearance(mirrored, cfg)


@dataclass(frozen=True)
class SmoothSpheroid(BranchCut):
    """Smoothed upper cut p = alpha*X_eps(q); closes onto the circle by itself."""

    alpha: float
    eps: float

    def __post_init__(self):
        if not (self.alpha > 0.0 and self.eps > 0.0):
            raise ValueError("alpha and eps must be positive")

    def sign(self, r, cfg):
        r = np.asarray(r, dtype=float)
        _, p, q = complex_distance_principal(r, cfg)
        inside = (q > 0.0) & (p < smooth_cut_function(q, self.alpha, self.eps))
        return np.where(inside, -1, 1)

    def cut_function(self, q, phi):
        return smooth_cut_function(np.asarray(q, dtype=float), self.alpha, self.eps)


@dataclass(frozen=True)
class CustomCut(BranchCut):
    """Cut given by p = chi(q, phi) on the double cover.

    chi must be odd in q and 2*pi-periodic in phi (spot-checked at
    construction); the membrane is assumed to lie on the q >= 0 sheet
    (chi >= 0 there).  The sign rule is evaluated by analytic continuation
    along a straight path from a far-zone anchor, counting membrane
    crossings.
    """

    chi: Callable
    n_steps: int = 4096

    def __post_init__(self):
        qs = np.array([0.13, 0.47, 0.81])
        phis = np.array([0.3, 2.1, 5.5])
        odd = np.asarray(self.chi(qs, phis)) + np.asarray(self.chi(-qs, phis))
        per = np.asarray(self.chi(qs, phis + 2.0 * np.pi)) - np.asarray(self.chi(qs, phis))
        if np.any(np.abs(odd) > 1e-9 * (1.0 + np.abs(self.chi(qs, phis)))):
            raise ValueError("cut function must be odd in q")
        if np.any(np.abs(per) > 1e-9 * (1.0 + np.abs(self.chi(qs, phis)))):
            raise ValueError("cut function must be 2*pi-periodic in phi")

    def cut_function(self, q, phi):
        return self.chi(q, phi)

    def sign(self, r, cfg):
        r = np.asarray(r, dtype=float)
        single = r.ndim == 1
        pts = r[None, :] if single else r.reshape(-1, 3)
        out = continued_sign(self, pts, cfg, n_steps=self.n_steps)
        if single:
            return out[0]
        return out.reshape(r.shape[:-1])


def continued_sign(cut: BranchCut, r, cfg: SourceConfig, anchor=None, n_steps: int = 4096):
    """Sign of sigma_cut/sigma_principal by continuation from a far anchor.

    Tracks sigma continuously along the straight segment anchor -> r and
    counts crossings of the membrane p = chi(q, phi) in the continued
    coordinates.  Works for any cut; used directly by CustomCut and as a
    cross-check for the closed-form sign rules.
    """
    r = np.atleast_2d(np.asarray(r, dtype=float))
    if anchor is None:
        anchor = 1e3 * cfg.a_mag * cfg.a_hat
    anchor = np.asarray(anchor, dtype=float)
    # steps clustered toward the target end, where the cut geometry lives
    u = np.linspace(0.0, 1.0, n_steps)
    s = (1.0 - (1.0 - u) ** 4)[:, None, None]
    out = np.empty(r.shape[0], dtype=int)
    for lo in range(0, r.shape[0], 256):
        chunk = r[lo : lo + 256]
        pts = anchor + s * (chunk[None, :, :] - anchor)  # (S, N, 3)
        sigma0, p0, q0 = complex_distance_principal(pts, cfg)
        if np.min(np.abs(sigma0)) < 1e-6 * cfg.a_mag:
            raise OnBranchCircleError("continuation path passes too close to the branch circle")
        phi = to_oblate(pts.reshape(-1, 3), cfg).phi.reshape(pts.shape[:2])
        # continuation: branch[k] = +-1 so that branch*sigma0 is continuous
        branch = np.ones(pts.shape[:2])
        prev = sigma0[0]
        for k in range(1, n_steps):
            plus = np.abs(sigma0[k] - prev) <= np.abs(sigma0[k] + prev)
            branch[k] = np.where(plus, 1.0, -1.0)
            prev = branch[k] * sigma0[k]
        p_c = branch * p0
        q_c = branch * q0
        chi = np.asarray(cut.cut_function(q_c, phi), dtype=float)
        f = p_c - chi
        if np.any(np.abs(f[-1]) < 1e-12 * cfg.a_mag):
            raise OnCutError("endpoint lies on the cut surface")
        crossings = np.sum(np.signbit(f[1:]) != np.signbit(f[:-1]), axis=0)
        out[lo : lo + 256] = np.where(crossings % 2 == 0, 1, -1) * branch[-1].astype(int)
    return out


def cut_clearance(cut: BranchCut, r, cfg: SourceConfig):
    """Estimated Euclidean distance from r to the cut surface (conservative)."""
    return cut.clearance(r, cfg)


def cut_sign(cut: BranchCut, r, cfg: SourceConfig, tol_cut: float | None = None):
    """Sign of sigma_cut relative to the principal branch: +1 outside, -1 inside.

    Raises OnCutError when r lies within tol_cut of the cut surface (the
    flat disk is the reference cut and never raises).
    """
    if tol_cut is None:
        tol_cut = 1e-9 * cfg.a_mag
    if not isinstance(cut, FlatDisk):
        clear = cut.clearance(r, cfg)
        if np.any(clear < tol_cut):
            raise OnCutError("point lies on the branch cut (within tolerance)")
    return cut.sign(r, cfg)


def complex_distance(cut: BranchCut, r, cfg: SourceConfig, tol_cut: float | None = None):
    """sigma with the given branch cut: cut sign times the principal value."""
    sigma0, _, _ = complex_distance_principal(r, cfg)
    return cut_sign(cut, r, cfg, tol_cut=tol_cut) * sigma0


def frame(r, cfg: SourceConfig, guard: float | None = None) -> ComplexDistanceSample:
    """Principal sigma together with grad p, grad q, u and the unit vectors.

    grad p = (p r + q a)/(p^2+q^2), grad q = (p a - q r)/(p^2+q^2),
    u = grad p - i grad q, e_p and e_q the unit vectors along increasing
    p and q.  On the symmetry axis grad q vanishes and e_q is returned as
    the zero vector.
    """
    r = np.asarray(r, dtype=float)
    if guard is None:
        guard = 1e-8 * cfg.a_mag
    sigma, p, q = complex_distance_principal(r, cfg)
    pq2 = p**2 + q**2
    if np.any(pq2 <= guard**2):
        raise OnBranchCircleError("field point on the branch circle (p = q = 0)")
    a = cfg.a
    a_mag = cfg.a_mag
    num_p = p[..., None] * r + q[..., None] * a
    num_q = p[..., None] * a - q[..., None] * r
    grad_p = num_p / pq2[..., None]
    grad_q = num_q / pq2[..., None]
    u = grad_p - 1j * grad_q
    e_p = num_p / (np.sqrt(pq2) * np.sqrt(p**2 + a_mag**2))[..., None]
    nq = np.sqrt(pq2) * np.sqrt(np.maximum(a_mag**2 - q**2, 0.0))
    with np.errstate(invalid="ignore", divide="ignore"):
        e_q = np.where(nq[..., None] > 0.0, num_q / np.where(nq == 0.0, 1.0, nq)[..., None], 0.0)
    return ComplexDistanceSample(sigma=sigma, p=p, q=q, grad_p=grad_p, grad_q=grad_q, u=u, e_p=e_p, e_q=e_q)
