"""The golden corpus: spec files with their expected outcomes."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from bicyclic import Element

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    form: str
    valid: bool
    # Expected left I-order verdict and certificate, valid specs only.
    left_verdict: Optional[bool] = None
    cert_element: Optional[Element] = None
    cert_reason: Optional[str] = None
    # Substring expected in one of the validation violations.
    violation: Optional[str] = None

    @property
    def path(self) -> Path:
        return CORPUS_DIR / f"{self.name}.spec"

    def text(self) -> str:
        return self.path.read_text(encoding="utf-8")


CORPUS = [
    CorpusEntry("r1", "upper", True, left_verdict=True),
    CorpusEntry("b_plus", "upper", True, left_verdict=True),
    CorpusEntry("t_above2", "lower", True, left_verdict=True),
    CorpusEntry("twosided_ii_all_columns", "twosided-ii", True, left_verdict=True),
    CorpusEntry("twosided_i_with_r1", "twosided-i", True, left_verdict=True),
    CorpusEntry("upper_row0_filled_prefix", "upper", True, left_verdict=True),
    CorpusEntry(
        "diagonal_pair", "diagonal", True,
        left_verdict=False, cert_element=Element(0, 1), cert_reason="idempotents-only",
    ),
    CorpusEntry(
        "diagonal_even_tail", "diagonal", True,
        left_verdict=False, cert_element=Element(0, 1), cert_reason="idempotents-only",
    ),
    CorpusEntry(
        "upper_row0_even", "upper", True,
        left_verdict=False, cert_element=Element(0, 1), cert_reason="parity",
    ),
    CorpusEntry(
        "lower_column0", "lower", True,
        left_verdict=False, cert_element=Element(1, 1), cert_reason="empty-L-class",
    ),
    CorpusEntry(
        "lower_columns_0_2", "lower", True,
        left_verdict=False, cert_element=Element(1, 1), cert_reason="empty-L-class",
    ),
    CorpusEntry(
        "twosided_ii_missing_column", "twosided-ii", True,
        left_verdict=False, cert_element=Element(0, 0), cert_reason="empty-L-class",
    ),
    CorpusEntry(
        "upper_rows_1_4_7_mod3", "upper", True,
        left_verdict=False, cert_element=Element(0, 1), cert_reason="parity",
    ),
    CorpusEntry(
        "lower_columns_1_4_6_mod3", "lower", True,
        left_verdict=False, cert_element=Element(0, 1), cert_reason="parity",
    ),
    CorpusEntry(
        "twosided_i_triangle_3_7_mod3", "twosided-i", True,
        left_verdict=False, cert_element=Element(0, 1), cert_reason="parity",
    ),
    CorpusEntry(
        "upper_row0_from3", "upper", True,
        left_verdict=False, cert_element=Element(0, 0), cert_reason="row0-gap",
    ),
    CorpusEntry("invalid_q_not_in_I", "twosided-i", False, violation="q in I fails"),
    CorpusEntry("invalid_zero_not_in_P", "twosided-i", False, violation="0 in P fails"),
    CorpusEntry(
        "invalid_sigma_residue_large", "twosided-ii", False,
        violation="P within {0,...,d-1} fails",
    ),
    CorpusEntry(
        "invalid_fd_above_strip", "upper", False,
        violation="FD within the column strip fails",
    ),
    CorpusEntry(
        "invalid_row_below_diagonal", "upper", False,
        violation="row F within the row fails",
    ),
]

VALID_ENTRIES = [e for e in CORPUS if e.valid]
INVALID_ENTRIES = [e for e in CORPUS if not e.valid]
YES_ENTRIES = [e for e in VALID_ENTRIES if e.left_verdict]
NO_ENTRIES = [e for e in VALID_ENTRIES if not e.left_verdict]
