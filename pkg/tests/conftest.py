import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from golden import VALID_ENTRIES
from bicyclic import parse_spec


@pytest.fixture(scope="session")
def corpus_specs():
    """Parsed spec for every valid corpus entry, keyed by name."""
    return {entry.name: parse_spec(entry.text()) for entry in VALID_ENTRIES}
