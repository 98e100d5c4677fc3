"""Pure-Python pair-product coverage kernel.

Reference twin of the compiled kernel in `_cover.pyx`; the two must stay
in lockstep.  Used automatically when the extension is not built, or when
BICYCLIC_PURE_KERNEL is set.
"""

from __future__ import annotations

from typing import Optional, Sequence


def cover_grid(
    xi: Sequence[int],
    xj: Sequence[int],
    window: int,
    start: int = 0,
    stop: Optional[int] = None,
) -> bytearray:
    """Mark every inverse(x) * y that lands inside the square window.

    xi/xj are the coordinates of the subsemigroup members acting as both
    factors; entry qi * (window + 1) + qj of the returned bytearray is 1
    iff some ordered pair (x, y) with index of x in [start, stop) yields
    the element (qi, qj).  Slicing over x partitions the work; the union
    (bytewise OR) of the slices equals the full run.
    """
    n = len(xi)
    hi = n if stop is None else stop
    size = window + 1
    cov = bytearray(size * size)
    for s in range(start, hi):
        i1 = xi[s]
        j1 = xj[s]
        base = j1 - i1
        for r in range(n):
            i2 = xi[r]
            t = i1 if i1 >= i2 else i2
            qi = base + t
            if qi > window:
                continue
            qj = xj[r] - i2 + t
            if qj <= window:
                cov[qi * size + qj] = 1
    return cov
