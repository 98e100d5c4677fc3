# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled pair-product coverage kernel.

Semantics are pinned by the pure twin in `_cover_py`; keep the two in
lockstep.
"""


def cover_grid(const long long[::1] xi, const long long[::1] xj,
               long long window, Py_ssize_t start=0, stop=None):
    """Mark every inverse(x) * y that lands inside the square window.

    xi/xj are the coordinates of the subsemigroup members acting as both
    factors; entry qi * (window + 1) + qj of the returned bytearray is 1
    iff some ordered pair (x, y) with index of x in [start, stop) yields
    the element (qi, qj).  Slicing over x partitions the work; the union
    (bytewise OR) of the slices equals the full run.
    """
    cdef Py_ssize_t n = xi.shape[0]
    cdef Py_ssize_t s, r
    cdef Py_ssize_t hi = n if stop is None else <Py_ssize_t> stop
    cdef long long i1, j1, i2, t, qi, qj
    cdef long long size = window + 1
    out = bytearray(size * size)
    cdef unsigned char[::1] cov = out
    for s in range(start, hi):
        i1 = xi[s]
        j1 = xj[s]
        for r in range(n):
            i2 = xi[r]
            t = i1 if i1 >= i2 else i2
            qi = j1 - i1 + t
            if qi > window:
                continue
            qj = xj[r] - i2 + t
            if qj <= window:
                cov[qi * size + qj] = 1
    return out
