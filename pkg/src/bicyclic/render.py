"""ASCII rendering of a subsemigroup inside the element array."""

from __future__ import annotations

from .elements import Element
from .subsemigroups import SubsemigroupSpec, _contains, require_valid

__all__ = ["render_window"]


def render_window(spec: SubsemigroupSpec, window: int) -> str:
    """Rows 0..window as lines of '#' (member) and '.' separated by spaces.

    Byte-exact contract: window + 1 lines of 2 * window + 1 characters,
    no trailing newline.
    """
    require_valid(spec)
    if window < 0:
        raise ValueError(f"window must be nonnegative, got {window}")
    lines = []
    for i in range(window + 1):
        marks = ("#" if _contains(spec, Element(i, j)) else "." for j in range(window + 1))
        lines.append(" ".join(marks))
    return "\n".join(lines)
