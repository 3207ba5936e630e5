"""Bernstein basis functions, their L2 Gram matrices, and degree raising.

The Gram matrices have closed forms in binomial coefficients:

    gram_same(m)[i, j]  = C(m,i) C(m,j) / ((2m+1) C(2m, i+j))
    gram_cross(m, n)[i, j] = C(m,i) C(n,j) / ((m+n+1) C(m+n, i+j))

Both quadratic programs of the reduction pipeline are assembled from them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import _kernels

MAX_BINOMIAL_N = 64


def binomial(n: int, k: int) -> float:
    """C(n, k) for 0 <= k <= n <= 64."""
    if n < 0 or k < 0 or k > n or n > MAX_BINOMIAL_N:
        raise ValueError(f"binomial out of supported range: C({n}, {k})")
    return float(math.comb(n, k))


def bernstein(n: int, i: int, t: float) -> float:
    """Value of the i-th degree-n Bernstein basis function at t in [0, 1]."""
    if n < 0 or i < 0 or i > n:
        raise ValueError(f"basis index out of range: i={i}, n={n}")
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"parameter outside [0, 1]: t={t}")
    return float(_kernels.basis_matrix(n, np.array([float(t)]))[0, i])


def rational_basis(weights: Sequence[float], i: int, t: float) -> float:
    """Value of the i-th rational basis function w_i B_i / sum_j w_j B_j."""
    w = np.asarray(weights, dtype=np.float64)
    n = len(w) - 1
    if n < 0 or i < 0 or i > n:
        raise ValueError(f"basis index out of range: i={i}, n={n}")
    if np.any(w <= 0):
        raise ValueError("rational basis needs strictly positive weights")
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"parameter outside [0, 1]: t={t}")
    return float(_kernels.rational_matrix(w, np.array([float(t)]))[0, i])


def gram_same(m: int) -> np.ndarray:
    """Matrix of inner products of the degree-m basis with itself; SPD."""
    if m < 0:
        raise ValueError(f"degree must be nonnegative, got {m}")
    return gram_cross(m, m)


def gram_cross(m: int, n: int) -> np.ndarray:
    """Matrix of inner products of the degree-m basis against degree-n."""
    if m < 0 or n < 0:
        raise ValueError(f"degrees must be nonnegative, got {m}, {n}")
    out = np.empty((m + 1, n + 1))
    for i in range(m + 1):
        for j in range(n + 1):
            out[i, j] = (
                binomial(m, i)
                * binomial(n, j)
                / ((m + n + 1) * binomial(m + n, i + j))
            )
    return out


def elevation_matrix(degree: int, raise_by: int) -> np.ndarray:
    """Linear map of Bernstein coefficients from ``degree`` to ``degree+raise_by``.

    Shape (degree+raise_by+1, degree+1); rows are nonnegative and sum to 1,
    so the represented polynomial is unchanged.
    """
    if degree < 0 or raise_by < 0:
        raise ValueError("degree and raise_by must be nonnegative")
    m, s = degree, raise_by
    out = np.zeros((m + s + 1, m + 1))
    for i in range(m + s + 1):
        denom = binomial(m + s, i)
        for j in range(max(0, i - s), min(m, i) + 1):
            out[i, j] = binomial(m, j) * binomial(s, i - j) / denom
    return out


@dataclass(frozen=True)
class BernsteinPoly:
    """Polynomial given by its Bernstein coefficients on [0, 1]."""

    coeffs: np.ndarray = field()

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.float64)
        if c.ndim != 1 or c.size < 1:
            raise ValueError("coefficients must be a nonempty 1-d sequence")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t):
        """Evaluate at a scalar or an array of parameters in [0, 1]."""
        ts = np.atleast_1d(np.asarray(t, dtype=np.float64))
        values = _kernels.basis_matrix(self.degree, ts) @ self.coeffs
        return float(values[0]) if np.isscalar(t) else values

    def elevated(self, raise_by: int) -> "BernsteinPoly":
        """Same polynomial re-expressed at a higher degree."""
        return BernsteinPoly(elevation_matrix(self.degree, raise_by) @ self.coeffs)
