"""Brute-force coverage oracle and decision cross-validation.

Coverage enumerates the subsemigroup inside a generous pair window and
marks every product inverse(x) * y that lands in the report window.  For
a left I-order the report window must come out fully covered; for a
negative decision the certificate element must sit in the gaps.  Window
checks refute but never prove, so negative confirmations are labeled
evidence throughout.

The pair loop is the package's one hot kernel.  A compiled extension is
used when available, with a pure-Python twin selected at import time as
the fallback (or forced via the BICYCLIC_PURE_KERNEL environment
variable).
"""

from __future__ import annotations

import os
from array import array
from dataclasses import dataclass
from typing import Optional

from .elements import Element
from .iorder import Decision, decide_left_iorder
from .subsemigroups import (
    ClosureFailure,
    Diagonal,
    Lower,
    SubsemigroupSpec,
    TwoSidedI,
    TwoSidedII,
    Upper,
    closure_falsify,
    enumerate_window,
    require_valid,
)

__all__ = [
    "KERNEL",
    "CoverageReport",
    "CrossCheckReport",
    "default_pair_bound",
    "coverage",
    "cross_validate",
]

if os.environ.get("BICYCLIC_PURE_KERNEL"):
    from . import _cover_py as _cover

    KERNEL = "python"
else:
    try:
        from . import _cover  # type: ignore[attr-defined]

        KERNEL = "compiled"
    except ImportError:
        from . import _cover_py as _cover

        KERNEL = "python"


@dataclass(frozen=True)
class CoverageReport:
    """Which window elements arise as inverse(x) * y over the member pairs."""

    window: int
    pair_bound: int
    covered: frozenset[Element]
    gaps: frozenset[Element]


def _growth_params(spec: SubsemigroupSpec) -> tuple[int, int]:
    if isinstance(spec, (Upper, Lower)):
        return 0, spec.rows.m_default
    if isinstance(spec, (TwoSidedI, TwoSidedII)):
        return spec.p, 0
    return 0, 0


def default_pair_bound(spec: SubsemigroupSpec, window: int) -> int:
    """Default member window for the pair enumeration.

    Follows the coordinate growth of the witness formulas, with slack:
    3 * (2 * window + p + m_default + 4).
    """
    p, m_default = _growth_params(spec)
    return 3 * (2 * window + p + m_default + 4)


def coverage(
    spec: SubsemigroupSpec, window: int, pair_bound: Optional[int] = None
) -> CoverageReport:
    """Enumerate pair products and partition the window into covered and gaps."""
    require_valid(spec)
    if window < 0:
        raise ValueError(f"window must be nonnegative, got {window}")
    if pair_bound is None:
        pair_bound = default_pair_bound(spec, window)
    members = enumerate_window(spec, pair_bound)
    # A product inverse(x) * y has first coordinate >= x.j and second
    # >= y.j, so members with j beyond the window cannot contribute.
    usable = sorted(e for e in members if e.j <= window)
    xi = array("q", [e.i for e in usable])
    xj = array("q", [e.j for e in usable])
    grid = _cover.cover_grid(xi, xj, window)
    size = window + 1
    covered = frozenset(
        Element(i, j) for i in range(size) for j in range(size) if grid[i * size + j]
    )
    gaps = frozenset(
        Element(i, j)
        for i in range(size)
        for j in range(size)
        if not grid[i * size + j]
    )
    return CoverageReport(window, pair_bound, covered, gaps)


@dataclass(frozen=True)
class CrossCheckReport:
    """Decision versus coverage oracle, with the closure probe alongside."""

    passed: bool
    decision: Decision
    coverage: CoverageReport
    closure: Optional[ClosureFailure]
    notes: tuple[str, ...] = ()


def cross_validate(
    spec: SubsemigroupSpec, window: int, pair_bound: Optional[int] = None
) -> CrossCheckReport:
    """PASS iff the decision and the coverage oracle agree on the window.

    A yes verdict demands zero gaps; a no verdict with a certificate
    element demands that element among the gaps whenever it fits the
    window.  Negative agreement is evidence, not proof.
    """
    decision = decide_left_iorder(spec)
    report = coverage(spec, window, pair_bound)
    closure = closure_falsify(spec, window)
    notes: list[str] = []
    passed = True
    if decision.verdict:
        passed = not report.gaps
        if not passed:
            notes.append(f"yes verdict but {len(report.gaps)} window gaps")
    else:
        cert = decision.certificate
        if cert is not None and cert.uncovered is not None:
            c = cert.uncovered
            if c.i <= window and c.j <= window:
                passed = c in report.gaps
                notes.append(
                    f"certificate {c} confirmed uncovered (evidence, not proof)"
                    if passed
                    else f"certificate {c} unexpectedly covered"
                )
            else:
                notes.append(f"certificate {c} outside window, not checked")
        else:
            notes.append("no certificate element to check")
    if closure is not None:
        notes.append(
            f"closure fails on window: {closure.x} * {closure.y} = {closure.product}"
        )
    return CrossCheckReport(passed, decision, report, closure, tuple(notes))
