"""Membership predicates for the basic subsets of the bicyclic monoid.

These are the building blocks of the subsemigroup classification: the
diagonal, the left strip of columns up to p, the triangle wedged between a
corner q and a bound p, single rows whose columns advance with a modular
spacing, and modular squares.  All predicates are pure and exact.
"""

from __future__ import annotations

from typing import Callable, Container, Iterable

from .elements import Element, hat

__all__ = [
    "in_diagonal",
    "in_left_strip",
    "in_triangle",
    "in_row",
    "in_rows",
    "in_square",
    "reflected",
]


def in_diagonal(x: Element) -> bool:
    """{(i, i) : i >= 0}."""
    return x.i == x.j


def in_left_strip(x: Element, p: int) -> bool:
    """{(i, j) : 0 <= j <= p}, the strip of the first p + 1 columns."""
    return x.j <= p


def in_triangle(x: Element, q: int, p: int) -> bool:
    """{(i, j) : q <= i <= j < p}; requires q <= p."""
    if q > p:
        raise ValueError(f"triangle needs q <= p, got q={q}, p={p}")
    return q <= x.i <= x.j < p


def in_row(x: Element, row: int, start: int, step: int) -> bool:
    """{(row, j) : step | j - row, j >= start}."""
    if step < 1:
        raise ValueError(f"row spacing must be positive, got step={step}")
    return x.i == row and x.j >= start and (x.j - x.i) % step == 0


def in_rows(x: Element, rows: Container[int], start: int, step: int) -> bool:
    """Union of `in_row` over a set of row indices, i.e.

    {(i, j) : i in rows, step | j - i, j >= start}.
    """
    if step < 1:
        raise ValueError(f"row spacing must be positive, got step={step}")
    return x.i in rows and x.j >= start and (x.j - x.i) % step == 0


def in_square(x: Element, corner: int, step: int, offsets: Iterable[int]) -> bool:
    """Union over r in offsets of {(corner+r+u*step, corner+r+v*step) : u, v >= 0}.

    Offsets may exceed step: each r marks the exact sub-corner corner + r,
    from which the square advances in multiples of step along both axes.
    Plain quadrants {(i, j) : i, j >= p} are step=1 with offsets={0}.
    """
    if step < 1:
        raise ValueError(f"square spacing must be positive, got step={step}")
    offs = tuple(offsets)
    for r in offs:
        if r < 0:
            raise ValueError(f"square offsets must be nonnegative, got {r}")
    for r in offs:
        base = corner + r
        if (
            x.i >= base
            and x.j >= base
            and (x.i - base) % step == 0
            and (x.j - base) % step == 0
        ):
            return True
    return False


def reflected(pred: Callable[[Element], bool], x: Element) -> bool:
    """Evaluate a predicate at the diagonal reflection of x.

    Turns any region into its mirror image below/above the diagonal.
    """
    return pred(hat(x))
