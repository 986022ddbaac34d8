"""Central-difference operators for fields sampled through callables.

All operators take a callable f(r, t) vectorized over points r with shape
(..., 3) (scalar- or 3-vector-valued) and differentiate it at the given
points.  Stencil order 2 or 4.  These back every numerical oracle in the
package; the closed-form field routines never difference anything.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "grad",
    "divergence",
    "curl",
    "time_derivative",
    "laplacian",
    "dalembertian",
    "hessian_apply",
    "nth_derivative_param",
    "richardson",
]

_FIRST = {
    2: ((-1, 1), (-0.5, 0.5)),
    4: ((-2, -1, 1, 2), (1.0 / 12, -8.0 / 12, 8.0 / 12, -1.0 / 12)),
}
_SECOND = {
    2: ((-1, 0, 1), (1.0, -2.0, 1.0)),
    4: ((-2, -1, 0, 1, 2), (-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12)),
}
# central stencils for the k-th derivative of a 1-parameter function
_PARAM = {
    1: ((-1, 1), (-0.5, 0.5)),
    2: ((-1, 0, 1), (1.0, -2.0, 1.0)),
    3: ((-2, -1, 1, 2), (-0.5, 1.0, -1.0, 0.5)),
    4: ((-2, -1, 0, 1, 2), (1.0, -4.0, 6.0, -4.0, 1.0)),
}


def _axis_first(f, r, t, h, axis, order):
    offs, wts = _FIRST[order]
    r = np.asarray(r, dtype=float)
    e = np.zeros(3)
    e[axis] = 1.0
    acc = sum(w * np.asarray(f(r + o * h * e, t)) for o, w in zip(offs, wts))
    return acc / h


def _axis_second(f, r, t, h, axis, order):
    offs, wts = _SECOND[order]
    r = np.asarray(r, dtype=float)
    e = np.zeros(3)
    e[axis] = 1.0
    acc = sum(w * np.asarray(f(r + o * h * e, t)) for o, w in zip(offs, wts))
    return acc / h**2


def grad(f, r, t, h, order: int = 2):
    """Gradient of scalar f; returns shape (..., 3)."""
    comps = [_axis_first(f, r, t, h, ax, order) for ax in range(3)]
    return np.stack(comps, axis=-1)


def divergence(F, r, t, h, order: int = 2):
    """Divergence of vector F (components on the last axis)."""
    return sum(
        _axis_first(lambda rr, tt, ax=ax: np.asarray(F(rr, tt))[..., ax], r, t, h, ax, order)
        for ax in range(3)
    )


def curl(F, r, t, h, order: int = 2):
    """Curl of vector F."""
    d = [
        [
            _axis_first(lambda rr, tt, c=c: np.asarray(F(rr, tt))[..., c], r, t, h, ax, order)
            for c in range(3)
        ]
        for ax in range(3)
    ]  # d[axis][component]
    return np.stack(
        [d[1][2] - d[2][1], d[2][0] - d[0][2], d[0][1] - d[1][0]],
        axis=-1,
    )


def time_derivative(f, r, t, h, order: int = 2, k: int = 1):
    """k-th time derivative (k = 1 or 2) of f(r, t)."""
    table = _FIRST if k == 1 else _SECOND
    offs, wts = table[order]
    acc = sum(w * np.asarray(f(r, t + o * h)) for o, w in zip(offs, wts))
    return acc / h**k


def laplacian(f, r, t, h, order: int = 2):
    return sum(_axis_second(f, r, t, h, ax, order) for ax in range(3))


def dalembertian(f, r, t, h, order: int = 2):
    """Wave operator d2/dt2 - laplacian applied to f."""
    return time_derivative(f, r, t, h, order, k=2) - laplacian(f, r, t, h, order)


def hessian_apply(f, r, t, h, v):
    """Hessian of scalar f applied to the constant vector v (2nd-order stencils)."""
    r = np.asarray(r, dtype=float)
    v = np.asarray(v)
    eye = np.eye(3)
    H = [[None] * 3 for _ in range(3)]
    for i in range(3):
        H[i][i] = _axis_second(f, r, t, h, i, 2)
        for j in range(i + 1, 3):
            ei, ej = eye[i] * h, eye[j] * h
            dij = (
                np.asarray(f(r + ei + ej, t))
                - np.asarray(f(r + ei - ej, t))
                - np.asarray(f(r - ei + ej, t))
                + np.asarray(f(r - ei - ej, t))
            ) / (4.0 * h**2)
            H[i][j] = H[j][i] = dij
    rows = [sum(H[i][j] * v[j] for j in range(3)) for i in range(3)]
    return np.stack(rows, axis=-1)


def nth_derivative_param(func, x0: float, k: int, h: float):
    """k-th derivative (k <= 4) of a 1-parameter function by central differences."""
    offs, wts = _PARAM[k]
    acc = sum(w * np.asarray(func(x0 + o * h)) for o, w in zip(offs, wts))
    return acc / h**k


def richardson(coarse, fine, order: int, ratio: float = 2.0):
    """Extrapolate two stencil evaluations at steps h and h/ratio."""
    fac = ratio**order
    return (fac * fine - coarse) / (fac - 1.0)
