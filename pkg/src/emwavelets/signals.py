"""Driving pulses as analytic signals of complex time.

A real driving signal g0(t) is complexified by convolution with the
Cauchy kernel, g(tau) = (1/2i*pi) int g0(t') dt'/(tau - t'), which is
analytic off the real axis and one-sided in frequency on each half-plane.
The workhorse family is C_n(tau) = (n-1)!/(2*pi*i^n*tau^n), the (n-1)-st
derivative of the Cauchy kernel: a band-pass pulse with center frequency
n/b and bandwidth sqrt(n)/|b| when evaluated at tau = t - i*b.

Beam-design formulas (pulse duration, peak strength, diffraction angle)
live here because they depend only on the pulse and the source geometry
scalars (a, b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import NoSolutionError, PoleOnPathError, QuadratureDivergenceError

__all__ = [
    "CauchySignal",
    "SampledSignal",
    "SignalSum",
    "SpectralProfile",
    "complex_time",
    "spectrum_cauchy",
    "spectral_profile",
    "pulse_duration",
    "peak_strength",
    "diffraction_angle",
    "mixed_signals",
    "boundary_recovery",
]


def complex_time(t, b):
    """tau = t - i*b."""
    return np.asarray(t, dtype=float) - 1j * b


class DrivingSignal:
    """Base class: a complexified pulse g(tau) with time derivatives."""

    def eval(self, tau, order: int = 0):
        raise NotImplementedError

    def __call__(self, tau):
        return self.eval(tau)


@dataclass(frozen=True)
class CauchySignal(DrivingSignal):
    """C_n(tau) = (n-1)!/(2*pi*i^n*tau^n); the n = 1 member is the impulse response kernel."""

    n: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be a positive integer")

    def eval(self, tau, order: int = 0):
        """d^order/dt^order C_n at tau; closed form, valid for tau != 0."""
        tau = np.asarray(tau, dtype=complex)
        if np.any(tau == 0):
            raise PoleOnPathError("Cauchy kernel evaluated at its pole tau = 0")
        n, k = self.n, order
        coef = (-1) ** k * math.factorial(n + k - 1) / (2.0 * np.pi * 1j**n)
        return coef * tau ** (-(n + k))


@dataclass(frozen=True)
class SampledSignal(DrivingSignal):
    """Analytic-signal transform of a uniformly sampled real signal g0(t).

    Evaluation is trapezoid quadrature of the Cauchy-kernel convolution on
    the sample grid; derivatives differentiate the kernel, not the data.
    Valid for |Im tau| >= 4*dt (the kernel smooths at that scale, finer
    offsets are under-resolved) unless Re tau falls outside the grid.
    """

    t: np.ndarray
    g0: np.ndarray
    decay_tol: float = 1e-3
    dt: float = field(init=False, default=0.0)

    def __post_init__(self):
        t = np.asarray(self.t, dtype=float)
        g0 = np.asarray(self.g0, dtype=float)
        if t.ndim != 1 or t.shape != g0.shape or t.size < 8:
            raise ValueError("need matching 1-d sample arrays with at least 8 points")
        dt = np.diff(t)
        if not np.allclose(dt, dt[0], rtol=1e-8, atol=0.0):
            raise ValueError("sample grid must be uniform")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "g0", g0)
        object.__setattr__(self, "dt", float(dt[0]))
        peak = float(np.max(np.abs(g0)))
        if peak == 0.0:
            raise ValueError("signal is identically zero")
        edge = max(abs(float(g0[0])), abs(float(g0[-1])))
        if edge > self.decay_tol * peak:
            raise QuadratureDivergenceError(
                "sampled signal does not decay at the grid ends; quadrature tails untrusted"
            )

    @classmethod
    def from_csv(cls, path, **kwargs):
        """Load two-column CSV (t, g0); rejects non-uniform grids."""
        data = np.loadtxt(path, delimiter=",", comments="#", ndmin=2)
        if data.shape[1] != 2:
            raise ValueError("expected two columns: t, g0")
        return cls(t=data[:, 0], g0=data[:, 1], **kwargs)

    def eval(self, tau, order: int = 0):
        tau = np.asarray(tau, dtype=complex)
        if np.any(np.abs(tau.imag) < 4.0 * self.dt):
            inside = (tau.real >= self.t[0]) & (tau.real <= self.t[-1])
            if np.any(inside & (np.abs(tau.imag) < 4.0 * self.dt)):
                raise ValueError(
                    "|Im tau| below 4*dt: the sample grid cannot resolve the kernel"
                )
        k = order
        shape = tau.shape
        flat = tau.reshape(-1)
        kern = (-1) ** k * math.factorial(k) / (2j * np.pi) / (flat[:, None] - self.t[None, :]) ** (k + 1)
        vals = np.trapezoid(kern * self.g0[None, :], self.t, axis=1)
        return vals.reshape(shape)


@dataclass(frozen=True)
class SignalSum(DrivingSignal):
    """Linear combination sum_k c_k * sig_k, e.g. mixes of high-order Cauchy kernels."""

    terms: tuple

    def __post_init__(self):
        terms = tuple((complex(c), s) for c, s in self.terms)
        if not terms:
            raise ValueError("empty combination")
        object.__setattr__(self, "terms", terms)

    def eval(self, tau, order: int = 0):
        return sum(c * s.eval(tau, order) for c, s in self.terms)


# --------------------------------------------------------------------------
# Spectra and beam-design formulas


class SpectralProfile(NamedTuple):
    center: float
    width: float


def spectrum_cauchy(n, omega, b):
    """Fourier transform of t -> C_n(t - i*b): sgn(b)*step(omega*b)*omega^(n-1)*exp(-omega*b).

    The step at omega = 0 is taken as 1/2.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    omega = np.asarray(omega, dtype=float)
    wb = omega * b
    step = np.where(wb > 0.0, 1.0, np.where(wb == 0.0, 0.5, 0.0))
    with np.errstate(invalid="ignore"):
        mag = np.where(step > 0.0, omega ** (n - 1) * np.exp(-wb), 0.0)
    return np.sign(b) * step * mag


def spectral_profile(n, b) -> SpectralProfile:
    """Band-pass center n/b and width sqrt(n)/|b| of C_n at imaginary time b."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if b == 0:
        raise ValueError("b must be nonzero")
    return SpectralProfile(center=n / b, width=math.sqrt(n) / abs(b))


def pulse_duration(theta, a, b, c: float = 1.0):
    """Angle-dependent pulse duration |b - (a/c)*cos(theta)| of the far-zone beam."""
    ta = a / c
    if not abs(b) > ta:
        raise ValueError("need c*|b| > a")
    return np.abs(b - ta * np.cos(np.asarray(theta, dtype=float)))


def peak_strength(theta, n, a, b, c: float = 1.0):
    """Far-zone peak amplitude (n-1)!/(2*pi*T(theta)^n) of the C_n beam."""
    T = pulse_duration(theta, a, b, c)
    return math.factorial(n - 1) / (2.0 * np.pi * T**n)


def diffraction_angle(beta, n, a, b, c: float = 1.0):
    """Angle where the beam peak drops to exp(-beta) of its on-axis value.

    Solves 2*sin(theta/2)^2 = (exp(beta/n) - 1)*(b - a/c)/(a/c); raises
    NoSolutionError when the right side exceeds 2 (no such angle).
    """
    ta = a / c
    if not b > ta:
        raise ValueError("requires b > a/c (beam along +a)")
    rhs = (math.exp(beta / n) - 1.0) * (b - ta) / ta
    if rhs > 2.0:
        raise NoSolutionError("peak never drops that far: (e^(beta/n)-1)(b-a)/a > 2")
    return 2.0 * math.asin(math.sqrt(rhs / 2.0))


def mixed_signals(sig: DrivingSignal, sigma, tau):
    """g+- = g(tau - sigma) +- g(tau + sigma) and their first two time derivatives.

    Returns (gp, gm, gp1, gm1, gp2, gm2); gp* are even and gm* odd under
    sigma -> -sigma.
    """
    sigma = np.asarray(sigma, dtype=complex)
    tau = np.asarray(tau, dtype=complex)
    out = []
    for k in (0, 1, 2):
        em = sig.eval(tau - sigma, k)
        ep = sig.eval(tau + sigma, k)
        out.append(em + ep)
        out.append(em - ep)
    return tuple(out)


def boundary_recovery(sig: DrivingSignal, t, b):
    """g(t - i*b) - g(t + i*b); converges to the original g0(t) as b -> 0+."""
    t = np.asarray(t, dtype=float)
    return sig.eval(t - 1j * b) - sig.eval(t + 1j * b)
