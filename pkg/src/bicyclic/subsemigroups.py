"""Finitely described subsemigroups of the bicyclic monoid.

Five spec forms cover the classification of subsemigroups: subsets of the
diagonal, the upper and lower forms built from rows (or their diagonal
reflections) that share one modular spacing, and the two two-sided forms
that combine a finite triangle with infinite rows and a modular square.

Each form is plain immutable data.  `validate` checks the parameter
constraints and returns violations as data rather than raising,
`contains` decides membership exactly for arbitrary elements,
`enumerate_window` lists the members of a square window, and
`closure_falsify` searches a window for a pair whose product escapes the
described set.  The classification guarantees every subsemigroup has one
of these shapes; the converse is not guaranteed, so the decision
procedures downstream assume the data denotes a genuine subsemigroup and
`closure_falsify` provides bounded assurance of that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import ClassVar, Optional, Union

from .elements import Element, multiply
from .regions import in_square

__all__ = [
    "IndexSet",
    "RowOverride",
    "RowData",
    "DiagonalTail",
    "Diagonal",
    "Upper",
    "Lower",
    "TwoSidedI",
    "TwoSidedII",
    "SubsemigroupSpec",
    "ValidationReport",
    "ClosureFailure",
    "InvalidSpecError",
    "validate",
    "require_valid",
    "contains",
    "enumerate_window",
    "closure_falsify",
]


@dataclass(frozen=True)
class IndexSet:
    """A set of nonnegative integers: finite part plus residue tails.

    Denotes fixed | {k >= start : k % step in residues}.  The finite part
    must lie below `start` and the residues below `step`, which makes the
    description canonical enough for the membership and gap queries here.
    """

    fixed: frozenset[int] = frozenset()
    residues: frozenset[int] = frozenset()
    start: int = 0
    step: int = 1

    def __contains__(self, k: int) -> bool:
        if k in self.fixed:
            return True
        return k >= self.start and k % self.step in self.residues

    def is_empty(self) -> bool:
        return not self.fixed and not self.residues

    def is_full(self) -> bool:
        """True iff the set is all of {0, 1, 2, ...}."""
        return self.fixed == frozenset(range(self.start)) and self.residues == frozenset(
            range(self.step)
        )

    def min(self) -> Optional[int]:
        candidates = list(self.fixed)
        for r in self.residues:
            candidates.append(self.start + (r - self.start) % self.step)
        return min(candidates) if candidates else None

    def first_gap(self, forbidden: frozenset[int] = frozenset()) -> Optional[int]:
        """Least k outside the set with k not in `forbidden`, or None.

        If the residues cover every class, the only gaps sit below
        `start`, so a bounded scan is exhaustive.
        """
        limit = max([self.start] + [k + 1 for k in forbidden]) + self.step + 1
        for k in range(limit + 1):
            if k not in self and k not in forbidden:
                return k
        return None

    def members_upto(self, bound: int) -> list[int]:
        return [k for k in range(bound + 1) if k in self]


@dataclass(frozen=True)
class RowOverride:
    """Per-row data: threshold m and finitely many extra members."""

    row: int
    m: int
    extra: frozenset[Element] = frozenset()


@dataclass(frozen=True)
class RowData:
    """Row thresholds: a default m plus finitely many overrides.

    The effective threshold of row i is max(m, i), so rows never dip
    below the diagonal.
    """

    m_default: int = 0
    overrides: tuple[RowOverride, ...] = ()

    def override_for(self, row: int) -> Optional[RowOverride]:
        for ov in self.overrides:
            if ov.row == row:
                return ov
        return None

    def threshold(self, row: int) -> int:
        ov = self.override_for(row)
        m = ov.m if ov is not None else self.m_default
        return max(m, row)

    def max_m(self) -> int:
        return max([self.m_default] + [ov.m for ov in self.overrides])


@dataclass(frozen=True)
class DiagonalTail:
    """Arithmetic progression of diagonal indices: n >= start, n % step == residue."""

    start: int
    step: int
    residue: int

    def __contains__(self, n: int) -> bool:
        return n >= self.start and n % self.step == self.residue


@dataclass(frozen=True)
class Diagonal:
    """A subset of the diagonal: finitely many idempotents plus an optional tail."""

    elements: frozenset[Element] = frozenset()
    tail: Optional[DiagonalTail] = None

    form: ClassVar[str] = "diagonal"


@dataclass(frozen=True)
class Upper:
    """Rows on or above the diagonal sharing one modular spacing.

    Denotes diagonal_part | union over i in row_indices of
    (extras of row i) | {(i, j) : step | j - i, j >= threshold(i)}.
    """

    diagonal_part: frozenset[Element] = frozenset()
    row_indices: IndexSet = field(default_factory=IndexSet)
    rows: RowData = field(default_factory=RowData)

    form: ClassVar[str] = "upper"

    @property
    def step(self) -> int:
        return self.row_indices.step


@dataclass(frozen=True)
class Lower:
    """Diagonal reflection of the upper form with the same parameters."""

    diagonal_part: frozenset[Element] = frozenset()
    row_indices: IndexSet = field(default_factory=IndexSet)
    rows: RowData = field(default_factory=RowData)

    form: ClassVar[str] = "lower"

    @property
    def step(self) -> int:
        return self.row_indices.step


@dataclass(frozen=True)
class TwoSidedI:
    """Triangle side up: diagonal part, triangle part, rows, and a square.

    Denotes diagonal_part | triangle_part
            | {(i, j) : i in row_indices, step | j - i, j >= p}
            | the modular square at corner p with the given offsets.
    """

    q: int
    p: int
    step: int
    row_indices: frozenset[int]
    offsets: frozenset[int]
    diagonal_part: frozenset[Element] = frozenset()
    triangle_part: frozenset[Element] = frozenset()

    form: ClassVar[str] = "twosided-i"


@dataclass(frozen=True)
class TwoSidedII:
    """Triangle side down: reflection of the non-square parts of form (i).

    The square is symmetric under reflection, so only the triangle and the
    rows flip below the diagonal.
    """

    q: int
    p: int
    step: int
    row_indices: frozenset[int]
    offsets: frozenset[int]
    diagonal_part: frozenset[Element] = frozenset()
    triangle_part: frozenset[Element] = frozenset()

    form: ClassVar[str] = "twosided-ii"


SubsemigroupSpec = Union[Diagonal, Upper, Lower, TwoSidedI, TwoSidedII]


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


class InvalidSpecError(ValueError):
    """Raised when an operation requires a spec that failed validation."""

    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__("invalid subsemigroup spec: " + "; ".join(report.violations))


_STRIP_NOTE = "FD bound read as the column strip: diagonal indices <= {bound}"


def _validate_diagonal(spec: Diagonal) -> ValidationReport:
    violations = []
    for e in sorted(spec.elements):
        if e.i != e.j:
            violations.append(f"elements on the diagonal fails: {e} is off the diagonal")
    if spec.tail is not None:
        t = spec.tail
        if t.step < 1:
            violations.append(f"tail_d >= 1 fails: tail_d={t.step}")
        elif not 0 <= t.residue < t.step:
            violations.append(f"tail_r within {{0,...,tail_d-1}} fails: tail_r={t.residue}")
        if t.start < 0:
            violations.append(f"tail_N >= 0 fails: tail_N={t.start}")
    if not spec.elements and spec.tail is None:
        violations.append("nonempty fails: no elements and no tail, the spec denotes the empty set")
    return ValidationReport(tuple(violations))


def _validate_index_set(idx: IndexSet, violations: list[str]) -> None:
    if idx.step < 1:
        violations.append(f"d >= 1 fails: d={idx.step}")
        return
    if idx.start < 0:
        violations.append(f"N >= 0 fails: N={idx.start}")
    for k in sorted(idx.fixed):
        if not 0 <= k < idx.start:
            violations.append(f"I0 within {{0,...,N-1}} fails: {k} with N={idx.start}")
    for r in sorted(idx.residues):
        if not 0 <= r < idx.step:
            violations.append(f"R within {{0,...,d-1}} fails: {r} with d={idx.step}")


def _validate_row_family(spec: Union[Upper, Lower]) -> ValidationReport:
    violations: list[str] = []
    notes: list[str] = []
    idx = spec.row_indices
    _validate_index_set(idx, violations)
    if violations:
        return ValidationReport(tuple(violations))
    if idx.is_empty():
        violations.append("I nonempty fails: the index set denotes no rows (use form=diagonal)")
        return ValidationReport(tuple(violations))

    lo = idx.min()
    assert lo is not None
    for e in sorted(spec.diagonal_part):
        if e.i != e.j:
            violations.append(f"FD on the diagonal fails: {e} is off the diagonal")
        elif e.i > lo:
            violations.append(
                f"FD within the column strip fails: index {e.i} exceeds min(I)={lo}"
            )
    if spec.diagonal_part:
        notes.append(_STRIP_NOTE.format(bound=f"min(I)={lo}"))

    seen_rows = set()
    for ov in spec.rows.overrides:
        if ov.row in seen_rows:
            violations.append(f"duplicate row override fails: row {ov.row}")
        seen_rows.add(ov.row)
        if ov.row not in idx:
            violations.append(f"override rows within I fails: row {ov.row} is not in I")
        if ov.m < 0:
            violations.append(f"row m >= 0 fails: m={ov.m} on row {ov.row}")
        for e in sorted(ov.extra):
            if e.i != ov.row or e.j < ov.row or (e.j - e.i) % idx.step != 0:
                violations.append(
                    f"row F within the row fails: {e} is not on row {ov.row} "
                    f"with spacing d={idx.step} at or above the diagonal"
                )
    if spec.rows.m_default < 0:
        violations.append(f"default_m >= 0 fails: default_m={spec.rows.m_default}")
    return ValidationReport(tuple(violations), tuple(notes))


def _validate_two_sided(spec: Union[TwoSidedI, TwoSidedII]) -> ValidationReport:
    violations: list[str] = []
    notes: list[str] = []
    if spec.step < 1:
        violations.append(f"d >= 1 fails: d={spec.step}")
    if spec.q < 0:
        violations.append(f"q >= 0 fails: q={spec.q}")
    if spec.q > spec.p:
        violations.append(f"q <= p fails: q={spec.q}, p={spec.p}")
    for k in sorted(spec.row_indices):
        if not spec.q <= k < spec.p:
            violations.append(f"I within {{q,...,p-1}} fails: {k} with q={spec.q}, p={spec.p}")
    if spec.q not in spec.row_indices:
        fmt = "{" + ",".join(str(k) for k in sorted(spec.row_indices)) + "}"
        violations.append(f"q in I fails: q={spec.q} is not in I={fmt}")
    if spec.step >= 1:
        for r in sorted(spec.offsets):
            if not 0 <= r < spec.step:
                violations.append(f"P within {{0,...,d-1}} fails: {r} with d={spec.step}")
    if 0 not in spec.offsets:
        fmt = "{" + ",".join(str(r) for r in sorted(spec.offsets)) + "}"
        violations.append(f"0 in P fails: P={fmt}")
    for e in sorted(spec.diagonal_part):
        if e.i != e.j:
            violations.append(f"FD on the diagonal fails: {e} is off the diagonal")
        elif e.i > spec.q:
            violations.append(f"FD within the column strip fails: index {e.i} exceeds q={spec.q}")
    if spec.diagonal_part:
        notes.append(_STRIP_NOTE.format(bound=f"q={spec.q}"))
    for e in sorted(spec.triangle_part):
        if not spec.q <= e.i <= e.j < spec.p:
            violations.append(
                f"F within the triangle fails: {e} is outside q <= i <= j < p "
                f"with q={spec.q}, p={spec.p}"
            )
    return ValidationReport(tuple(violations), tuple(notes))


@lru_cache(maxsize=None)
def validate(spec: SubsemigroupSpec) -> ValidationReport:
    """Check every parameter constraint; violations come back as data."""
    if isinstance(spec, Diagonal):
        return _validate_diagonal(spec)
    if isinstance(spec, (Upper, Lower)):
        return _validate_row_family(spec)
    if isinstance(spec, (TwoSidedI, TwoSidedII)):
        return _validate_two_sided(spec)
    raise TypeError(f"not a subsemigroup spec: {spec!r}")


def require_valid(spec: SubsemigroupSpec) -> None:
    report = validate(spec)
    if not report.ok:
        raise InvalidSpecError(report)


def _in_row_family(spec: Union[Upper, Lower], row: int, col: int) -> bool:
    # Shared body for the upper form and its reflection: `row`/`col` are
    # already in the stored (upper) orientation.
    idx = spec.row_indices
    if row not in idx:
        return False
    ov = spec.rows.override_for(row)
    if ov is not None and Element(row, col) in ov.extra:
        return True
    return col >= spec.rows.threshold(row) and (col - row) % idx.step == 0


def _contains(spec: SubsemigroupSpec, x: Element) -> bool:
    if isinstance(spec, Diagonal):
        if x.i != x.j:
            return False
        return x in spec.elements or (spec.tail is not None and x.i in spec.tail)
    if isinstance(spec, Upper):
        return x in spec.diagonal_part or _in_row_family(spec, x.i, x.j)
    if isinstance(spec, Lower):
        return x in spec.diagonal_part or _in_row_family(spec, x.j, x.i)
    if isinstance(spec, TwoSidedI):
        return (
            x in spec.diagonal_part
            or x in spec.triangle_part
            or (
                x.i in spec.row_indices
                and x.j >= spec.p
                and (x.j - x.i) % spec.step == 0
            )
            or in_square(x, spec.p, spec.step, spec.offsets)
        )
    if isinstance(spec, TwoSidedII):
        return (
            x in spec.diagonal_part
            or Element(x.j, x.i) in spec.triangle_part
            or (
                x.j in spec.row_indices
                and x.i >= spec.p
                and (x.i - x.j) % spec.step == 0
            )
            or in_square(x, spec.p, spec.step, spec.offsets)
        )
    raise TypeError(f"not a subsemigroup spec: {spec!r}")


def contains(spec: SubsemigroupSpec, x: Element) -> bool:
    """Exact membership of x in the denoted set."""
    require_valid(spec)
    return _contains(spec, x)


def enumerate_window(spec: SubsemigroupSpec, window: int) -> set[Element]:
    """All members with both coordinates at most `window`."""
    require_valid(spec)
    return {
        Element(i, j)
        for i in range(window + 1)
        for j in range(window + 1)
        if _contains(spec, Element(i, j))
    }


@dataclass(frozen=True)
class ClosureFailure:
    """A pair of members whose product falls outside the described set."""

    x: Element
    y: Element
    product: Element


def closure_falsify(spec: SubsemigroupSpec, window: int) -> Optional[ClosureFailure]:
    """Search the window for a product that escapes the set.

    Returns the first failing pair in sorted order, or None.  A None
    result is evidence that the data denotes a genuine subsemigroup, not
    a proof: products of elements outside the window are never examined.
    """
    require_valid(spec)
    members = sorted(enumerate_window(spec, window))
    for x in members:
        for y in members:
            prod = multiply(x, y)
            if not _contains(spec, prod):
                return ClosureFailure(x, y, prod)
    return None
