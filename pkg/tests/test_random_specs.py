"""Seeded randomized sweep: decisions versus the coverage oracle.

Random parameter data for every form, filtered to specs that survive the
closure probe (genuine subsemigroups as far as the window shows).  Each
survivor must cross-validate cleanly, and every yes verdict must
decompose and verify across a window.
"""

import random

from bicyclic import (
    Diagonal,
    DiagonalTail,
    Element,
    IndexSet,
    Lower,
    RowData,
    RowOverride,
    TwoSidedI,
    TwoSidedII,
    Upper,
    closure_falsify,
    cross_validate,
    decompose,
    validate,
    verify_witness,
)

fs = frozenset


def subset(pool, rng, maxlen=3):
    pool = list(pool)
    rng.shuffle(pool)
    return fs(pool[: rng.randint(0, min(maxlen, len(pool)))])


def random_row_family(rng):
    d = rng.choice([1, 1, 2, 3])
    n = rng.randint(0, 4)
    idx = IndexSet(subset(range(n), rng), subset(range(d), rng), n, d)
    if idx.is_empty():
        return None
    overrides = ()
    if rng.random() < 0.5:
        rows_in = [k for k in range(8) if k in idx]
        if rows_in:
            row = rng.choice(rows_in)
            extras = subset([Element(row, row + d * u) for u in range(4)], rng)
            overrides = (RowOverride(row, rng.randint(0, 5), extras),)
    fd = subset([Element(k, k) for k in range(idx.min() + 1)], rng, 2)
    cls = Upper if rng.random() < 0.5 else Lower
    return cls(fd, idx, RowData(rng.randint(0, 4), overrides))


def random_two_sided(rng):
    q = rng.randint(0, 3)
    p = rng.randint(q + 1, q + 4)
    d = rng.choice([1, 1, 2, 3])
    rows = fs({q}) | subset(range(q, p), rng, p - q)
    offsets = fs({0}) | subset(range(d), rng)
    fd = subset([Element(k, k) for k in range(q + 1)], rng, 2)
    triangle = subset(
        [Element(a, b) for a in range(q, p) for b in range(a, p)], rng, 3
    )
    cls = TwoSidedI if rng.random() < 0.5 else TwoSidedII
    return cls(q, p, d, rows, offsets, fd, triangle)


def random_diagonal(rng):
    elems = subset([Element(k, k) for k in range(6)], rng, 4)
    tail = None
    if rng.random() < 0.5:
        step = rng.randint(1, 3)
        tail = DiagonalTail(rng.randint(0, 5), step, rng.randint(0, step - 1))
    if not elems and tail is None:
        return None
    return Diagonal(elems, tail)


def test_randomized_cross_validation():
    rng = random.Random(987654321)
    checked = 0
    yes = 0
    for _ in range(700):
        roll = rng.random()
        if roll < 0.2:
            spec = random_diagonal(rng)
        elif roll < 0.6:
            spec = random_row_family(rng)
        else:
            spec = random_two_sided(rng)
        if spec is None or not validate(spec).ok:
            continue
        if closure_falsify(spec, 10) is not None:
            continue
        checked += 1
        report = cross_validate(spec, 6)
        assert report.passed, (spec, report.notes)
        if report.decision.verdict:
            yes += 1
            for i in range(9):
                for j in range(9):
                    w = decompose(spec, Element(i, j))
                    assert verify_witness(spec, w), (spec, w)
    # the sweep must actually exercise both verdicts
    assert checked > 200, checked
    assert 0 < yes < checked
