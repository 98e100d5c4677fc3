"""Decision procedures for left and right I-orders in the bicyclic monoid.

A subsemigroup S is a left I-order when every element of the monoid
factors as inverse(x) * y with x, y in S; it is a right I-order when every
element factors as x * inverse(y).  For each classification form the left
question reduces to finitely checkable parameter conditions:

  diagonal      never (products of idempotents are idempotent)
  upper         the identity row is contained in S
  lower         unit spacing and every column index present
  twosided-i    the identity row is contained in S
  twosided-ii   unit spacing and column indices exactly {0, ..., p-1}

Negative verdicts carry a certificate: the failed condition plus, when
one can be read off the data, a concrete element that no product
inverse(x) * y can reach.  The right question reduces to the left one for
the reflected spec, since reflection is an anti-isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .elements import Element
from .subsemigroups import (
    Diagonal,
    Lower,
    SubsemigroupSpec,
    TwoSidedI,
    TwoSidedII,
    Upper,
    _contains,
    require_valid,
)

__all__ = [
    "Condition",
    "Certificate",
    "Decision",
    "decide_left_iorder",
    "decide_right_iorder",
    "hat_spec",
    "decision_lines",
]

REASON_PARITY = "parity"
REASON_EMPTY_L_CLASS = "empty-L-class"
REASON_ROW0_GAP = "row0-gap"
REASON_IDEMPOTENTS_ONLY = "idempotents-only"


@dataclass(frozen=True)
class Condition:
    name: str
    holds: bool


@dataclass(frozen=True)
class Certificate:
    """Why the verdict is no: a failed condition, optionally witnessed.

    The `uncovered` element, when present, is provably not of the form
    inverse(x) * y over the subsemigroup and can be confirmed against the
    brute-force coverage oracle.
    """

    failed_condition: str
    uncovered: Optional[Element] = None
    reason: Optional[str] = None


@dataclass(frozen=True)
class Decision:
    verdict: bool
    form: str
    conditions: tuple[Condition, ...]
    certificate: Optional[Certificate] = None


def _decision(form: str, conditions: tuple[Condition, ...], certificate) -> Decision:
    verdict = all(c.holds for c in conditions)
    assert verdict == (certificate is None)
    return Decision(verdict, form, conditions, certificate)


def _decide_diagonal(spec: Diagonal) -> Decision:
    # Products of idempotents are idempotent, so inverse(x) * y stays on
    # the diagonal and (0, 1) is never reached.
    cond = Condition("contains-non-idempotent", False)
    cert = Certificate("contains-non-idempotent", Element(0, 1), REASON_IDEMPOTENTS_ONLY)
    return _decision(spec.form, (cond,), cert)


def _row0_gap(spec: SubsemigroupSpec, limit: int) -> Optional[int]:
    """Least h <= limit with (0, h) missing from S, or None."""
    for h in range(limit + 1):
        if not _contains(spec, Element(0, h)):
            return h
    return None


def _decide_upper(spec: Upper) -> Decision:
    step = spec.row_indices.step
    has_row0 = 0 in spec.row_indices
    # Below the row-0 threshold the row must be filled by finite parts;
    # at and above it the modular tail takes over, so a bounded scan of
    # the row decides containment of the whole identity row.
    limit = spec.rows.threshold(0) + 1 if has_row0 else 1
    gap = _row0_gap(spec, limit)
    conditions = (
        Condition("d-is-1", step == 1),
        Condition("row-0-in-indices", has_row0),
        Condition("row-0-prefix-covered", gap is None),
    )
    if all(c.holds for c in conditions):
        return _decision(spec.form, conditions, None)
    if step != 1:
        cert = Certificate("d-is-1", Element(0, 1), REASON_PARITY)
    else:
        assert gap is not None
        cert = Certificate(
            "row-0-in-indices" if not has_row0 else "row-0-prefix-covered",
            Element(0, gap),
            REASON_ROW0_GAP,
        )
    return _decision(spec.form, conditions, cert)


def _diagonal_indices(spec) -> frozenset[int]:
    return frozenset(e.i for e in spec.diagonal_part)


def _decide_lower(spec: Lower) -> Decision:
    step = spec.row_indices.step
    full = spec.row_indices.is_full()
    conditions = (
        Condition("d-is-1", step == 1),
        Condition("all-columns-present", full),
    )
    if all(c.holds for c in conditions):
        return _decision(spec.form, conditions, None)
    if step != 1:
        cert = Certificate("d-is-1", Element(0, 1), REASON_PARITY)
    else:
        # Any column index outside I whose diagonal point is not patched
        # by FD marks an empty L-class, so its idempotent is unreachable.
        k = spec.row_indices.first_gap(forbidden=_diagonal_indices(spec))
        uncovered = Element(k, k) if k is not None else None
        reason = REASON_EMPTY_L_CLASS if k is not None else None
        cert = Certificate("all-columns-present", uncovered, reason)
    return _decision(spec.form, conditions, cert)


def _decide_twosided_i(spec: TwoSidedI) -> Decision:
    # Membership of (0, h) is eventually periodic in h with period d, so
    # with d = 1 checking through p + 1 decides the whole identity row.
    gap = _row0_gap(spec, spec.p + 1)
    conditions = (
        Condition("d-is-1", spec.step == 1),
        Condition("q-is-0", spec.q == 0),
        Condition("identity-row-covered", gap is None),
    )
    if all(c.holds for c in conditions):
        return _decision(spec.form, conditions, None)
    if spec.step != 1:
        cert = Certificate("d-is-1", Element(0, 1), REASON_PARITY)
    else:
        assert gap is not None
        cert = Certificate("identity-row-covered", Element(0, gap), REASON_ROW0_GAP)
    return _decision(spec.form, conditions, cert)


def _decide_twosided_ii(spec: TwoSidedII) -> Decision:
    wanted = frozenset(range(spec.p))
    conditions = (
        Condition("d-is-1", spec.step == 1),
        Condition("columns-0-to-p-covered", spec.row_indices == wanted),
    )
    if all(c.holds for c in conditions):
        return _decision(spec.form, conditions, None)
    if spec.step != 1:
        cert = Certificate("d-is-1", Element(0, 1), REASON_PARITY)
    else:
        # A missing column below p is an empty L-class provided neither FD
        # nor the reflected triangle touches it.
        fd = _diagonal_indices(spec)
        triangle_rows = {e.i for e in spec.triangle_part}
        uncovered = None
        for m in sorted(wanted - spec.row_indices):
            if m not in fd and m not in triangle_rows:
                uncovered = Element(m, m)
                break
        reason = REASON_EMPTY_L_CLASS if uncovered is not None else None
        cert = Certificate("columns-0-to-p-covered", uncovered, reason)
    return _decision(spec.form, conditions, cert)


def decide_left_iorder(spec: SubsemigroupSpec) -> Decision:
    """Decide whether the described subsemigroup is a left I-order."""
    require_valid(spec)
    if isinstance(spec, Diagonal):
        return _decide_diagonal(spec)
    if isinstance(spec, Upper):
        return _decide_upper(spec)
    if isinstance(spec, Lower):
        return _decide_lower(spec)
    if isinstance(spec, TwoSidedI):
        return _decide_twosided_i(spec)
    if isinstance(spec, TwoSidedII):
        return _decide_twosided_ii(spec)
    raise TypeError(f"not a subsemigroup spec: {spec!r}")


def hat_spec(spec: SubsemigroupSpec) -> SubsemigroupSpec:
    """The spec describing the diagonal reflection of the set.

    Upper and lower swap with identical parameters, the two two-sided
    forms swap (the square is reflection-fixed), and diagonal specs are
    fixed points.  An involution by construction.
    """
    require_valid(spec)
    if isinstance(spec, Diagonal):
        return spec
    if isinstance(spec, Upper):
        return Lower(spec.diagonal_part, spec.row_indices, spec.rows)
    if isinstance(spec, Lower):
        return Upper(spec.diagonal_part, spec.row_indices, spec.rows)
    if isinstance(spec, TwoSidedI):
        return TwoSidedII(
            spec.q, spec.p, spec.step, spec.row_indices, spec.offsets,
            spec.diagonal_part, spec.triangle_part,
        )
    if isinstance(spec, TwoSidedII):
        return TwoSidedI(
            spec.q, spec.p, spec.step, spec.row_indices, spec.offsets,
            spec.diagonal_part, spec.triangle_part,
        )
    raise TypeError(f"not a subsemigroup spec: {spec!r}")


def decide_right_iorder(spec: SubsemigroupSpec) -> Decision:
    """S is a right I-order iff its reflection is a left I-order."""
    return decide_left_iorder(hat_spec(spec))


def decision_lines(decision: Decision, side: str = "left") -> list[str]:
    """Machine-readable key=value rendering of a decision."""
    lines = [
        f"side={side}",
        f"verdict={'yes' if decision.verdict else 'no'}",
        f"form={decision.form}",
    ]
    for cond in decision.conditions:
        lines.append(f"condition.{cond.name}={'holds' if cond.holds else 'fails'}")
    if decision.certificate is not None:
        cert = decision.certificate
        lines.append(f"certificate.failed={cert.failed_condition}")
        if cert.uncovered is not None:
            lines.append(f"certificate.element={cert.uncovered}")
        if cert.reason is not None:
            lines.append(f"certificate.reason={cert.reason}")
    return lines
