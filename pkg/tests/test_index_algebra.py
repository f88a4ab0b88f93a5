import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ntupled.errors import (
    BadArity,
    DimensionMismatch,
    DomainViolation,
    OutOfRangeEntry,
    ShapeMismatch,
    UnknownPreset,
)
from ntupled.index_algebra import (
    Partition,
    UpsilonTuple,
    backward_cyclic,
    berzig_samet,
    build_from_matrix,
    forward_cyclic,
    from_upsilon,
    is_member_U,
    is_permuted,
    odd_even,
    preset,
    prefix_partition,
    skew_1,
    skew_n,
    to_upsilon,
    upsilon_compatible,
)

# selection matrices as printed for the tripled/quadrupled literature
BERINDE_BORCUT = [[1, 2, 3], [2, 1, 2], [3, 2, 1]]
WU_LIU_3 = [[1, 2, 3], [2, 3, 2], [3, 2, 1]]
BERZIG_SAMET_3 = [[1, 2, 3], [2, 1, 3], [3, 3, 2]]
KARAPINAR_LUONG = [[1, 2, 3, 4], [2, 3, 4, 1], [3, 4, 1, 2], [4, 1, 2, 3]]
WU_LIU_4 = [[1, 4, 3, 2], [2, 1, 4, 3], [3, 2, 1, 4], [4, 3, 2, 1]]
BERZIG_SAMET_4 = [[1, 2, 3, 4], [1, 2, 4, 3], [3, 4, 2, 1], [3, 4, 1, 2]]


def _brute_member(op, part):
    # direct transcription of the four closure rules
    for i, k in itertools.product(range(1, op.n + 1), repeat=2):
        same = (i in part.A) == (k in part.A)
        if (op(i, k) in part.A) != same:
            return False
    return True


class TestBuild:
    def test_roundtrip(self):
        op = build_from_matrix(3, BERZIG_SAMET_3)
        assert op.rows == BERZIG_SAMET_3
        assert op(3, 3) == 2

    def test_out_of_range_reports_position(self):
        with pytest.raises(OutOfRangeEntry) as exc:
            build_from_matrix(2, [[1, 2], [3, 1]])
        assert (exc.value.i, exc.value.k, exc.value.value) == (2, 1, 3)

    def test_shape(self):
        with pytest.raises(ShapeMismatch):
            build_from_matrix(3, [[1, 2, 3], [1, 2]])

    def test_arity(self):
        with pytest.raises(BadArity):
            build_from_matrix(1, [[1]])

    def test_non_integer_entry(self):
        with pytest.raises(OutOfRangeEntry):
            build_from_matrix(2, [[1, 2], [2, 1.5]])


class TestFormulas:
    def test_small_cases_by_hand(self):
        assert forward_cyclic(2).rows == [[1, 2], [2, 1]]
        assert backward_cyclic(3).rows == [[1, 3, 2], [2, 1, 3], [3, 2, 1]]
        assert skew_1(3).rows == BERINDE_BORCUT
        assert skew_n(3).rows == WU_LIU_3
        assert forward_cyclic(4).rows == KARAPINAR_LUONG
        assert backward_cyclic(4).rows == WU_LIU_4

    @pytest.mark.parametrize("n", range(2, 9))
    def test_cyclic_rows_are_rotations(self, n):
        for i in range(1, n + 1):
            assert list(forward_cyclic(n).row(i)) == [(i - 1 + j) % n + 1 for j in range(n)]
            assert list(backward_cyclic(n).row(i)) == [(i - 1 - j) % n + 1 for j in range(n)]

    @pytest.mark.parametrize("n", range(2, 9))
    def test_skew_rows_reflect(self, n):
        for i in range(1, n + 1):
            assert list(skew_1(n).row(i)) == [abs(i - k) + 1 for k in range(1, n + 1)]
            assert list(skew_n(n).row(i)) == [n - abs(n + 1 - i - k) for k in range(1, n + 1)]


class TestBerzigSamet:
    def test_tripled(self):
        op = berzig_samet(3, 2, [[1, 2], [2, 1], [3, 3]], [[3], [3], [2]])
        assert op.rows == BERZIG_SAMET_3

    def test_quadrupled(self):
        op = berzig_samet(4, 2, [[1, 2], [1, 2], [3, 4], [3, 4]],
                          [[3, 4], [4, 3], [2, 1], [1, 2]])
        assert op.rows == BERZIG_SAMET_4

    def test_range_break(self):
        with pytest.raises(DomainViolation):
            berzig_samet(3, 2, [[1, 3], [2, 1], [3, 3]], [[3], [3], [2]])

    def test_bad_p(self):
        with pytest.raises(DomainViolation):
            berzig_samet(3, 3, [[1, 2, 3]] * 3, [[]] * 3)


class TestMembership:
    def test_odd_forward_cyclic_witnesses(self):
        m = is_member_U(forward_cyclic(3), odd_even(3))
        assert not m
        assert {(w.pair, w.value) for w in m.witnesses} == {((2, 3), 1), ((3, 2), 1), ((3, 3), 2)}

    def test_presets_are_members(self):
        for name in ("coupled", "berinde-borcut", "wu-liu-3", "berzig-samet-3",
                     "karapinar-luong", "wu-liu-4", "berzig-samet-4"):
            op, part = preset(name)
            assert is_member_U(op, part), name

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            is_member_U(forward_cyclic(3), odd_even(4))

    @pytest.mark.parametrize("n", range(2, 10))
    def test_skew_always_member(self, n):
        assert is_member_U(skew_1(n), odd_even(n))
        assert is_member_U(skew_n(n), odd_even(n))

    @pytest.mark.parametrize("n", range(2, 10))
    def test_cyclic_member_iff_even(self, n):
        assert bool(is_member_U(forward_cyclic(n), odd_even(n))) == (n % 2 == 0)
        assert bool(is_member_U(backward_cyclic(n), odd_even(n))) == (n % 2 == 0)

    def test_all_binary_operations_n2_agree_with_brute_force(self):
        for part in (Partition(2, [1], [2]), Partition(2, [2], [1])):
            members = 0
            for flat in itertools.product((1, 2), repeat=4):
                op = build_from_matrix(2, [flat[:2], flat[2:]])
                assert bool(is_member_U(op, part)) == _brute_member(op, part)
                members += _brute_member(op, part)
            assert members == 1


class TestPartition:
    def test_invalid(self):
        with pytest.raises(DomainViolation):
            Partition(3, [1, 2, 3], [])
        with pytest.raises(DomainViolation):
            Partition(3, [1, 2], [2, 3])
        with pytest.raises(DomainViolation):
            Partition(3, [1], [2])

    def test_shorthands(self):
        assert odd_even(5).A == {1, 3, 5}
        assert prefix_partition(4, 2).B == {3, 4}


class TestPermuted:
    def test_example_pair(self):
        assert is_permuted(build_from_matrix(3, [[1, 2, 3], [2, 1, 3], [3, 2, 1]])) == (True, None)
        assert is_permuted(build_from_matrix(3, BERZIG_SAMET_3)) == (False, 3)

    def test_skew_not_permuted(self):
        for n in range(3, 7):
            assert not is_permuted(skew_1(n))[0]
            assert not is_permuted(skew_n(n))[0]


class TestUpsilon:
    def test_roundtrip(self):
        op = forward_cyclic(4)
        assert from_upsilon(to_upsilon(op)) == op

    def test_compatible_matches_membership(self):
        for name in ("coupled", "berinde-borcut", "karapinar-luong"):
            op, part = preset(name)
            assert upsilon_compatible(to_upsilon(op), part)
        assert not upsilon_compatible(to_upsilon(forward_cyclic(3)), odd_even(3))

    def test_bad_sigma(self):
        with pytest.raises(OutOfRangeEntry):
            UpsilonTuple(2, ((1, 2), (3, 1)))


class TestPresets:
    def test_unknown(self):
        with pytest.raises(UnknownPreset):
            preset("no-such-thing")

    def test_fixed_arity(self):
        with pytest.raises(BadArity):
            preset("coupled", 3)

    def test_general_needs_n(self):
        with pytest.raises(BadArity):
            preset("skew-1")
        op, part = preset("skew-1", 5)
        assert op == skew_1(5) and part == odd_even(5)

    def test_upsilon_preset(self):
        op, part = preset("upsilon", sigmas=[[1, 2], [2, 1]], A=[1], B=[2])
        assert op.rows == [[1, 2], [2, 1]] and part.A == {1}


@st.composite
def partitioned_ops(draw, max_n=6):
    n = draw(st.integers(2, max_n))
    A = draw(st.sets(st.integers(1, n), min_size=1, max_size=n - 1))
    B = set(range(1, n + 1)) - A
    part = Partition(n, A, B)
    rows = draw(st.lists(st.lists(st.integers(1, n), min_size=n, max_size=n), min_size=n, max_size=n))
    return build_from_matrix(n, rows), part


@settings(max_examples=300, deadline=None)
@given(partitioned_ops())
def test_membership_matches_brute_force(data):
    op, part = data
    m = is_member_U(op, part)
    assert bool(m) == _brute_member(op, part)
    assert (not m.witnesses) == bool(m)
    assert upsilon_compatible(to_upsilon(op), part) == bool(m)


@settings(max_examples=300, deadline=None)
@given(partitioned_ops())
def test_permuted_iff_rows_full(data):
    op, _ = data
    full = set(range(1, op.n + 1))
    assert is_permuted(op)[0] == all(set(op.row(i)) == full for i in range(1, op.n + 1))


@settings(max_examples=100, deadline=None)
@given(partitioned_ops())
def test_upsilon_roundtrip_property(data):
    op, _ = data
    assert from_upsilon(to_upsilon(op)) == op
