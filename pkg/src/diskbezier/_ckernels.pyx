# Compiled sampling kernels. Mirrors diskbezier._pykernels: two-pass basis
# rows with an exact binomial row, so t=0 / t=1 rows are exact unit vectors.

import numpy as np

cimport numpy as cnp

cnp.import_array()


def binomial_row(int n):
    """C(n, 0..n) as floats; multiplicative recurrence, exact for n <= 56."""
    out = np.empty(n + 1)
    cdef double[::1] row = out
    cdef int k
    row[0] = 1.0
    for k in range(1, n + 1):
        row[k] = row[k - 1] * (n - k + 1) / k
    return out


cdef inline void _basis_into(int n, double t, const double[::1] binom,
                             double* row) nogil:
    cdef int i
    cdef double u = 1.0
    row[0] = 1.0
    for i in range(1, n + 1):
        row[i] = row[i - 1] * t
    for i in range(n - 1, -1, -1):
        u *= 1.0 - t
        row[i] *= u
    for i in range(n + 1):
        row[i] *= binom[i]


def basis_matrix(int n, ts):
    """Degree-n Bernstein basis values, shape (len(ts), n+1)."""
    cdef const double[::1] tv = np.ascontiguousarray(ts, dtype=np.float64)
    out = np.empty((tv.shape[0], n + 1))
    cdef double[:, ::1] ov = out
    cdef double[::1] binom = binomial_row(n)
    cdef Py_ssize_t j
    with nogil:
        for j in range(tv.shape[0]):
            _basis_into(n, tv[j], binom, &ov[j, 0])
    return out


def rational_matrix(weights, ts):
    """Rows of rational basis values w_i B_i / sum_j w_j B_j; rows sum to 1."""
    cdef const double[::1] wv = np.ascontiguousarray(weights, dtype=np.float64)
    cdef int n = wv.shape[0] - 1
    cdef const double[::1] tv = np.ascontiguousarray(ts, dtype=np.float64)
    out = np.empty((tv.shape[0], n + 1))
    cdef double[:, ::1] ov = out
    cdef double[::1] binom = binomial_row(n)
    cdef Py_ssize_t j
    cdef int i
    cdef double den
    with nogil:
        for j in range(tv.shape[0]):
            _basis_into(n, tv[j], binom, &ov[j, 0])
            den = 0.0
            for i in range(n + 1):
                ov[j, i] *= wv[i]
                den += ov[j, i]
            for i in range(n + 1):
                ov[j, i] /= den
    return out


def curve_samples(px, py, radii, weights, ts):
    """Sample center coordinates and radius of a disk rational curve."""
    cdef const double[::1] xv = np.ascontiguousarray(px, dtype=np.float64)
    cdef const double[::1] yv = np.ascontiguousarray(py, dtype=np.float64)
    cdef const double[::1] rv = np.ascontiguousarray(radii, dtype=np.float64)
    cdef const double[::1] wv = np.ascontiguousarray(weights, dtype=np.float64)
    cdef int n = wv.shape[0] - 1
    cdef const double[::1] tv = np.ascontiguousarray(ts, dtype=np.float64)
    cdef Py_ssize_t size = tv.shape[0]

    out_x = np.empty(size)
    out_y = np.empty(size)
    out_r = np.empty(size)
    cdef double[::1] oxv = out_x
    cdef double[::1] oyv = out_y
    cdef double[::1] orv = out_r
    cdef double[::1] binom = binomial_row(n)
    cdef double[::1] row = np.empty(n + 1)

    cdef Py_ssize_t j
    cdef int i
    cdef double den, ri, x, y, basis
    with nogil:
        for j in range(size):
            _basis_into(n, tv[j], binom, &row[0])
            ri = 0.0
            den = 0.0
            for i in range(n + 1):
                ri += rv[i] * row[i]
                row[i] *= wv[i]
                den += row[i]
            x = 0.0
            y = 0.0
            for i in range(n + 1):
                basis = row[i] / den
                x += xv[i] * basis
                y += yv[i] * basis
            oxv[j] = x
            oyv[j] = y
            orv[j] = ri
    return out_x, out_y, out_r
