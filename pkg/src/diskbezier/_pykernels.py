"""Pure numpy sampling kernels (fallback for the compiled extension).

Same contract as diskbezier._ckernels: basis rows via the two-pass scheme
(powers of t and 1-t accumulated iteratively, exact binomial row), so the
row at t=0 is exactly e_0 and at t=1 exactly e_n.
"""

import math

import numpy as np


def binomial_row(n: int) -> np.ndarray:
    """C(n, 0..n) as floats (exact integers for the degrees used here)."""
    return np.array([float(math.comb(n, i)) for i in range(n + 1)])


def basis_matrix(n: int, ts: np.ndarray) -> np.ndarray:
    """Degree-n Bernstein basis values, shape (len(ts), n+1)."""
    ts = np.ascontiguousarray(ts, dtype=np.float64)
    size = ts.shape[0]
    out = np.empty((size, n + 1))
    out[:, 0] = 1.0
    for i in range(1, n + 1):  # forward pass: t^i
        out[:, i] = out[:, i - 1] * ts
    u = np.ones(size)
    one_minus = 1.0 - ts
    for i in range(n - 1, -1, -1):  # backward pass: (1-t)^(n-i)
        u *= one_minus
        out[:, i] *= u
    out *= binomial_row(n)
    return out


def rational_matrix(weights: np.ndarray, ts: np.ndarray) -> np.ndarray:
    """Rows of rational basis values w_i B_i / sum_j w_j B_j; rows sum to 1."""
    b = basis_matrix(len(weights) - 1, ts)
    b *= weights
    b /= b.sum(axis=1)[:, None]
    return b


def curve_samples(
    px: np.ndarray,
    py: np.ndarray,
    radii: np.ndarray,
    weights: np.ndarray,
    ts: np.ndarray,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Sample center coordinates and radius of a disk rational curve.

    Center uses the rational basis (weights folded in, then normalized),
    radius is the plain Bernstein combination of control radii.
    """
    n = len(weights) - 1
    b = basis_matrix(n, ts)
    r = b @ radii
    b *= weights
    b /= b.sum(axis=1)[:, None]
    return b @ px, b @ py, r
