import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ntupled.errors import DimensionMismatch, IndexOutOfRange, PreconditionUnmet
from ntupled.index_algebra import Partition, build_from_matrix, forward_cyclic, odd_even, preset, skew_1
from ntupled.product_lift import (
    apply_F_star,
    apply_G,
    comparable,
    delta_n,
    lemma4_check,
    lemma6_check,
    nabla_n,
    orientation,
    product_leq,
    slice_,
)
from ntupled.spaces import IDENTITY, FiniteOrderedMetricSpace, MappingTable, RealSpace

R = RealSpace()


class TestSlices:
    def test_hand_values(self):
        op, _ = preset("berinde-borcut")
        U = ("x", "y", "z")
        assert slice_(U, op, 2) == ("y", "x", "y")
        assert apply_F_star(lambda u: "".join(u), op, U) == ("xyz", "yxy", "zyx")

    def test_errors(self):
        op = forward_cyclic(3)
        with pytest.raises(IndexOutOfRange):
            slice_((1, 2, 3), op, 4)
        with pytest.raises(DimensionMismatch):
            slice_((1, 2), op, 1)


class TestMetrics:
    def test_exact_values(self):
        s = FiniteOrderedMetricSpace.chain([0, 1, 2])
        assert delta_n((0, 0, 2), (1, 0, 0), s) == 1
        assert delta_n((0, 1), (1, 1), s) == Fraction(1, 2)
        assert nabla_n((0, 0, 2), (1, 0, 0), s) == 2

    def test_length_mismatch(self):
        with pytest.raises(DimensionMismatch):
            delta_n((0.0,), (0.0, 1.0), R)


class TestOrder:
    def test_mixed_direction(self):
        part = Partition(2, [1], [2])
        assert product_leq((0, 5), (1, 4), part, R)
        assert not product_leq((0, 3), (1, 4), part, R)
        assert orientation((1, 4), (0, 5), part, R) == -1
        assert not comparable((0, 3), (1, 4), part, R)


class TestOrderedSlices:
    def test_requires_membership(self):
        with pytest.raises(PreconditionUnmet):
            lemma4_check(IDENTITY, forward_cyclic(3), odd_even(3), (0, 0, 0), (1, 0, 1), R)

    def test_requires_comparable(self):
        op, part = preset("coupled")
        with pytest.raises(PreconditionUnmet):
            lemma4_check(IDENTITY, op, part, (0, 0), (1, 1), R)

    def test_holds_on_example(self):
        op, part = preset("wu-liu-4")
        assert lemma4_check(IDENTITY, op, part, (0, 3, 0, 3), (1, 2, 2, 1), R) == []


class TestRowMetrics:
    def test_permuted_equalities(self):
        op, _ = preset("karapinar-luong")
        rep = lemma6_check(IDENTITY, op, (0.0, 1.0, 2.0, 3.0), (1.0, 1.0, 0.0, 7.0), R)
        assert rep.permuted and rep.ok and not rep.sum_failures and not rep.max_failures

    def test_non_permuted_findings(self):
        rep = lemma6_check(IDENTITY, skew_1(3), (0.0, 0.0, 0.0), (0.0, 0.0, 9.0), R)
        assert not rep.permuted and rep.ok
        assert rep.sum_failures and not rep.bound_failures


floats = st.floats(-100, 100, allow_nan=False)


@st.composite
def op_and_tuples(draw):
    n = draw(st.integers(2, 5))
    rows = draw(st.lists(st.lists(st.integers(1, n), min_size=n, max_size=n), min_size=n, max_size=n))
    U = tuple(draw(st.lists(floats, min_size=n, max_size=n)))
    V = tuple(draw(st.lists(floats, min_size=n, max_size=n)))
    return build_from_matrix(n, rows), U, V


@settings(max_examples=300, deadline=None)
@given(op_and_tuples())
def test_metric_sandwich(data):
    op, U, V = data
    d, m = delta_n(U, V, R), nabla_n(U, V, R)
    assert m / op.n <= d + 1e-9 and d <= m + 1e-9


@settings(max_examples=300, deadline=None)
@given(op_and_tuples(), st.integers(-3, 3))
def test_slice_commutes_with_G(data, shift):
    op, U, _ = data
    g = lambda x: x * 2 + shift
    for i in range(1, op.n + 1):
        assert apply_G(g, slice_(U, op, i)) == slice_(apply_G(g, U), op, i)


@settings(max_examples=300, deadline=None)
@given(op_and_tuples())
def test_row_distance_bound_always(data):
    op, U, V = data
    rep = lemma6_check(IDENTITY, op, U, V, R)
    assert not rep.bound_failures
    if rep.permuted:
        assert not rep.sum_failures and not rep.max_failures


def test_ordered_slices_exhaustive_on_chain():
    s = FiniteOrderedMetricSpace.chain([0, 1, 2])
    g = MappingTable({0: 0, 1: 2, 2: 2}, 1)
    op, part = preset("coupled")
    tuples = list(itertools.product(s.elements, repeat=2))
    checked = 0
    for U, V in itertools.product(tuples, repeat=2):
        if comparable(apply_G(g, U), apply_G(g, V), part, s):
            assert lemma4_check(g, op, part, U, V, s) == []
            checked += 1
    assert checked > 0
