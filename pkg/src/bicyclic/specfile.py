"""Parser for the line-oriented subsemigroup spec format.

Lines hold whitespace-separated key=value tokens; '#' starts a comment.
Keys by form:

    form=diagonal|upper|lower|twosided-i|twosided-ii
    diagonal      elements=<elements>  tail_N=<int> tail_d=<int> tail_r=<int>
    upper/lower   d=<int> N=<int> I0=<ints> R=<ints> FD=<elements>
                  default_m=<int>  plus repeatable lines
                  row=<int> m=<int> F=<elements>
    twosided-*    q=<int> p=<int> d=<int> I=<ints> P=<ints>
                  FD=<elements> F=<elements>

Integer lists are comma separated, element lists look like (0,0),(1,2),
and an empty value denotes the empty set.  Unknown or misplaced keys are
errors; parsing ends with validation, so a syntactically fine file with
inconsistent parameters is rejected too.
"""

from __future__ import annotations

import re
from typing import Optional

from .elements import Element
from .subsemigroups import (
    Diagonal,
    DiagonalTail,
    IndexSet,
    Lower,
    RowData,
    RowOverride,
    SubsemigroupSpec,
    TwoSidedI,
    TwoSidedII,
    Upper,
    validate,
)

__all__ = [
    "SpecError",
    "SpecSyntaxError",
    "SpecValidationError",
    "parse_spec",
    "parse_spec_unchecked",
]


class SpecError(Exception):
    """Base class for spec file problems."""


class SpecSyntaxError(SpecError):
    def __init__(self, message: str, line_no: Optional[int] = None):
        self.line_no = line_no
        where = f"line {line_no}: " if line_no is not None else ""
        super().__init__(where + message)


class SpecValidationError(SpecError):
    def __init__(self, violations: tuple[str, ...]):
        self.violations = violations
        super().__init__("; ".join(violations))


_FORMS = ("diagonal", "upper", "lower", "twosided-i", "twosided-ii")
_KEYS_BY_FORM = {
    "diagonal": {"elements", "tail_N", "tail_d", "tail_r"},
    "upper": {"d", "N", "I0", "R", "FD", "default_m"},
    "lower": {"d", "N", "I0", "R", "FD", "default_m"},
    "twosided-i": {"q", "p", "d", "I", "P", "FD", "F"},
    "twosided-ii": {"q", "p", "d", "I", "P", "FD", "F"},
}

_ELEMENT_RE = re.compile(r"\((\d+),(\d+)\)")


def _parse_int(value: str, key: str, line_no: int) -> int:
    if not value.isdigit():
        raise SpecSyntaxError(f"{key} expects a nonnegative integer, got {value!r}", line_no)
    return int(value)


def _parse_int_set(value: str, key: str, line_no: int) -> frozenset[int]:
    if value == "":
        return frozenset()
    out = set()
    for part in value.split(","):
        if not part.isdigit():
            raise SpecSyntaxError(f"{key} expects comma-separated integers, got {part!r}", line_no)
        out.add(int(part))
    return frozenset(out)


def _parse_elements(value: str, key: str, line_no: int) -> frozenset[Element]:
    if value == "":
        return frozenset()
    matches = list(_ELEMENT_RE.finditer(value))
    rebuilt = ",".join(m.group(0) for m in matches)
    if rebuilt != value:
        raise SpecSyntaxError(
            f"{key} expects elements like (0,0),(1,2) with no spaces, got {value!r}", line_no
        )
    return frozenset(Element(int(m.group(1)), int(m.group(2))) for m in matches)


def _split_tokens(line: str, line_no: int) -> list[tuple[str, str]]:
    tokens = []
    for part in line.split():
        key, sep, value = part.partition("=")
        if not sep or not key:
            raise SpecSyntaxError(f"expected key=value, got {part!r}", line_no)
        tokens.append((key, value))
    return tokens


def _parse_row_line(tokens: list[tuple[str, str]], line_no: int) -> RowOverride:
    row = _parse_int(tokens[0][1], "row", line_no)
    m: Optional[int] = None
    extra: frozenset[Element] = frozenset()
    seen = set()
    for key, value in tokens[1:]:
        if key in seen:
            raise SpecSyntaxError(f"duplicate key {key!r} on row line", line_no)
        seen.add(key)
        if key == "m":
            m = _parse_int(value, "m", line_no)
        elif key == "F":
            extra = _parse_elements(value, "F", line_no)
        else:
            raise SpecSyntaxError(f"unknown key {key!r} on row line", line_no)
    if m is None:
        raise SpecSyntaxError("row line needs m=<int>", line_no)
    return RowOverride(row, m, extra)


def parse_spec_unchecked(text: str) -> SubsemigroupSpec:
    """Parse without running validation (the CLI classify path needs that)."""
    values: dict[str, str] = {}
    value_lines: dict[str, int] = {}
    rows: list[RowOverride] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = _split_tokens(line, line_no)
        if tokens[0][0] == "row":
            rows.append(_parse_row_line(tokens, line_no))
            continue
        for key, value in tokens:
            if key == "row":
                raise SpecSyntaxError("row must start its own line", line_no)
            if key in values:
                raise SpecSyntaxError(f"duplicate key {key!r}", line_no)
            values[key] = value
            value_lines[key] = line_no

    if "form" not in values:
        raise SpecSyntaxError("missing form=<diagonal|upper|lower|twosided-i|twosided-ii>")
    form = values.pop("form")
    if form not in _FORMS:
        raise SpecSyntaxError(f"unknown form {form!r}", value_lines["form"])
    allowed = _KEYS_BY_FORM[form]
    for key in values:
        if key not in allowed:
            raise SpecSyntaxError(f"unknown key {key!r} for form={form}", value_lines[key])
    if rows and form not in ("upper", "lower"):
        raise SpecSyntaxError(f"row lines are not allowed for form={form}")

    def need(key: str) -> str:
        if key not in values:
            raise SpecSyntaxError(f"form={form} requires {key}=<...>")
        return values[key]

    def intval(key: str) -> int:
        return _parse_int(need(key), key, value_lines[key])

    if form == "diagonal":
        elements = _parse_elements(values.get("elements", ""), "elements", value_lines.get("elements", 0))
        tail_keys = [k for k in ("tail_N", "tail_d", "tail_r") if k in values]
        tail = None
        if tail_keys:
            if len(tail_keys) != 3:
                raise SpecSyntaxError("tail needs all of tail_N, tail_d, tail_r")
            tail = DiagonalTail(intval("tail_N"), intval("tail_d"), intval("tail_r"))
        return Diagonal(elements, tail)

    if form in ("upper", "lower"):
        index_set = IndexSet(
            fixed=_parse_int_set(values.get("I0", ""), "I0", value_lines.get("I0", 0)),
            residues=_parse_int_set(values.get("R", ""), "R", value_lines.get("R", 0)),
            start=intval("N"),
            step=intval("d"),
        )
        row_data = RowData(
            m_default=_parse_int(values.get("default_m", "0"), "default_m", value_lines.get("default_m", 0)),
            overrides=tuple(rows),
        )
        diagonal_part = _parse_elements(values.get("FD", ""), "FD", value_lines.get("FD", 0))
        cls = Upper if form == "upper" else Lower
        return cls(diagonal_part, index_set, row_data)

    cls2 = TwoSidedI if form == "twosided-i" else TwoSidedII
    return cls2(
        q=intval("q"),
        p=intval("p"),
        step=intval("d"),
        row_indices=_parse_int_set(need("I"), "I", value_lines["I"]),
        offsets=_parse_int_set(need("P"), "P", value_lines["P"]),
        diagonal_part=_parse_elements(values.get("FD", ""), "FD", value_lines.get("FD", 0)),
        triangle_part=_parse_elements(values.get("F", ""), "F", value_lines.get("F", 0)),
    )


def parse_spec(text: str) -> SubsemigroupSpec:
    """Parse and validate; violations raise SpecValidationError."""
    spec = parse_spec_unchecked(text)
    report = validate(spec)
    if not report.ok:
        raise SpecValidationError(report.violations)
    return spec
