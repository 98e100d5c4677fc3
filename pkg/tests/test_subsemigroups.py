import pytest

from bicyclic import (
    Diagonal,
    DiagonalTail,
    Element,
    IndexSet,
    InvalidSpecError,
    Lower,
    RowData,
    RowOverride,
    TwoSidedI,
    TwoSidedII,
    Upper,
    closure_falsify,
    contains,
    enumerate_window,
    hat,
    multiply,
    validate,
)

fs = frozenset

R1 = Upper(fs(), IndexSet(fs({0}), fs(), 1, 1), RowData(0))
B_PLUS = Upper(fs(), IndexSet(fs(), fs({0}), 0, 1), RowData(0))


class TestIndexSet:
    def test_membership(self):
        idx = IndexSet(fixed=fs({1, 4, 7}), residues=fs(), start=8, step=3)
        assert 4 in idx and 7 in idx
        assert 0 not in idx and 8 not in idx and 100 not in idx
        idx = IndexSet(fixed=fs({0}), residues=fs({1}), start=5, step=2)
        assert 0 in idx and 5 in idx and 7 in idx
        assert 1 not in idx and 3 not in idx and 6 not in idx

    def test_is_full(self):
        assert IndexSet(fs(), fs({0}), 0, 1).is_full()
        assert IndexSet(fs({0, 1}), fs({0}), 2, 1).is_full()
        assert not IndexSet(fs({0}), fs(), 1, 1).is_full()
        assert not IndexSet(fs({0}), fs({0}), 2, 1).is_full()

    def test_min(self):
        assert IndexSet(fs({3}), fs({1}), 6, 4).min() == 3
        assert IndexSet(fs(), fs({1}), 6, 4).min() == 9
        assert IndexSet(fs(), fs(), 0, 1).min() is None

    def test_first_gap(self):
        assert IndexSet(fs({0}), fs(), 1, 1).first_gap() == 1
        assert IndexSet(fs({0, 2}), fs(), 3, 1).first_gap() == 1
        assert IndexSet(fs(), fs({0}), 0, 1).first_gap() is None
        # gaps hidden behind forbidden indices
        idx = IndexSet(fs(), fs({0}), 5, 1)
        assert idx.first_gap() == 0
        assert idx.first_gap(forbidden=fs({0, 1, 2, 3, 4})) is None

    def test_members_upto(self):
        idx = IndexSet(fs({1}), fs({0}), 4, 2)
        assert idx.members_upto(8) == [1, 4, 6, 8]


class TestValidate:
    def test_q_in_i_violation(self):
        spec = TwoSidedI(1, 3, 1, fs({2}), fs({0}))
        report = validate(spec)
        assert not report.ok
        assert any("q in I fails" in v for v in report.violations)

    def test_small_upper_ok(self):
        spec = Upper(fs({Element(0, 0)}), IndexSet(fs({0}), fs(), 1, 1), RowData(0))
        assert validate(spec).ok

    def test_zero_in_p_violation(self):
        spec = TwoSidedI(0, 1, 2, fs({0}), fs({1}))
        report = validate(spec)
        assert any("0 in P fails" in v for v in report.violations)

    def test_strip_reading_is_noted(self):
        spec = Upper(fs({Element(0, 0)}), IndexSet(fs({0}), fs(), 1, 1), RowData(0))
        assert any("column strip" in note for note in validate(spec).notes)

    def test_empty_index_set_rejected(self):
        spec = Upper(fs(), IndexSet(fs(), fs(), 0, 1), RowData(0))
        assert any("I nonempty fails" in v for v in validate(spec).violations)

    def test_override_outside_index_set(self):
        spec = Upper(
            fs(), IndexSet(fs({0}), fs(), 1, 1),
            RowData(0, (RowOverride(5, 5, fs()),)),
        )
        assert any("override rows within I fails" in v for v in validate(spec).violations)

    def test_diagonal_violations(self):
        assert any(
            "off the diagonal" in v
            for v in validate(Diagonal(fs({Element(1, 2)}))).violations
        )
        assert any(
            "empty set" in v for v in validate(Diagonal(fs())).violations
        )
        report = validate(Diagonal(fs({Element(1, 1)}), DiagonalTail(4, 2, 3)))
        assert any("tail_r" in v for v in report.violations)

    def test_index_set_bounds(self):
        spec = Upper(fs(), IndexSet(fs({3}), fs(), 2, 1), RowData(0))
        assert any("I0 within" in v for v in validate(spec).violations)
        spec = Upper(fs(), IndexSet(fs(), fs({2}), 0, 2), RowData(0))
        assert any("R within" in v for v in validate(spec).violations)

    def test_invalid_spec_blocks_operations(self):
        spec = TwoSidedI(1, 3, 1, fs({2}), fs({0}))
        with pytest.raises(InvalidSpecError):
            contains(spec, Element(0, 0))
        with pytest.raises(InvalidSpecError):
            enumerate_window(spec, 3)
        with pytest.raises(InvalidSpecError):
            closure_falsify(spec, 3)


class TestContains:
    def test_twosided_row_tail(self):
        spec = TwoSidedI(0, 3, 1, fs({0, 2}), fs({0}), fs(), fs({Element(0, 1)}))
        assert contains(spec, Element(2, 5))

    def test_r1_membership(self):
        assert contains(R1, Element(0, 9))
        assert not contains(R1, Element(1, 1))

    def test_diagonal_tail_membership(self):
        spec = Diagonal(fs({Element(1, 1)}), DiagonalTail(4, 2, 0))
        assert contains(spec, Element(1, 1))
        assert contains(spec, Element(6, 6))
        assert not contains(spec, Element(5, 5))
        assert not contains(spec, Element(2, 2))


class TestEnumerateWindow:
    def test_r1_window(self):
        assert enumerate_window(R1, 3) == {
            Element(0, 0), Element(0, 1), Element(0, 2), Element(0, 3)
        }

    def test_window_excludes_everything(self):
        assert enumerate_window(Diagonal(fs({Element(1, 1)})), 0) == set()

    def test_b_plus_window(self):
        assert enumerate_window(B_PLUS, 1) == {
            Element(0, 0), Element(0, 1), Element(1, 1)
        }

    def test_agrees_with_contains_on_corpus(self, corpus_specs):
        for spec in corpus_specs.values():
            members = enumerate_window(spec, 9)
            for i in range(10):
                for j in range(10):
                    e = Element(i, j)
                    assert (e in members) == contains(spec, e)


class TestClosureFalsify:
    def test_r1_closed(self):
        assert closure_falsify(R1, 10) is None

    def test_single_row_closed(self):
        spec = Upper(fs(), IndexSet(fs({1}), fs(), 2, 1), RowData(1))
        assert closure_falsify(spec, 5) is None

    def test_unclosed_triangle_choice(self):
        # (0,1) in F but row 1 missing: some product must escape.
        spec = TwoSidedI(0, 2, 1, fs({0}), fs({0}), fs(), fs({Element(0, 1)}))
        failure = closure_falsify(spec, 6)
        assert failure is not None
        assert multiply(failure.x, failure.y) == failure.product
        assert contains(spec, failure.x) and contains(spec, failure.y)
        assert not contains(spec, failure.product)

    def test_corpus_closed_at_12(self, corpus_specs):
        for name, spec in corpus_specs.items():
            assert closure_falsify(spec, 12) is None, name


class TestShapeInvariants:
    def test_upper_above_lower_below(self, corpus_specs):
        for spec in corpus_specs.values():
            members = enumerate_window(spec, 12)
            if isinstance(spec, Upper):
                assert all(e.j >= e.i for e in members)
            if isinstance(spec, Lower):
                assert all(e.i >= e.j for e in members)

    def test_lower_is_hat_image_of_upper(self, corpus_specs):
        for spec in corpus_specs.values():
            if isinstance(spec, Lower):
                mirrored = Upper(spec.diagonal_part, spec.row_indices, spec.rows)
                assert enumerate_window(spec, 12) == {
                    hat(e) for e in enumerate_window(mirrored, 12)
                }

    def test_step_divides_coordinate_difference(self, corpus_specs):
        for spec in corpus_specs.values():
            if isinstance(spec, Diagonal):
                continue
            for e in enumerate_window(spec, 12):
                assert (e.j - e.i) % spec.step == 0
