import itertools

import numpy as np
import pytest

from ntupled.contractions import linear
from ntupled.errors import HypothesesNotMachineVerified, InfiniteSpaceUndecidable, SizeLimit
from ntupled.index_algebra import is_member_U, preset
from ntupled.instance import load_instance
from ntupled.oracle import (
    all_posets,
    certify_theorem,
    enumerate_star_coincidence,
    enumerate_star_fixed,
    lemma_suite,
    mixed_monotone_table,
    random_instance,
    random_op_in_U,
    random_partition,
    random_space,
)
from ntupled.solver import ProblemInstance, check_mixed_monotone
from ntupled.spaces import IDENTITY, FiniteOrderedMetricSpace, MappingTable, RealSpace, validate_space

COUPLED, HALVES = preset("coupled")


def _brute_coincidence(space, F, g, op):
    out = set()
    for U in itertools.product(space.elements, repeat=op.n):
        if all(F(tuple(U[op(i, k) - 1] for k in range(1, op.n + 1))) == g(U[i - 1])
               for i in range(1, op.n + 1)):
            out.add(U)
    return out


class TestEnumeration:
    def test_projection_fixed_points(self):
        s = FiniteOrderedMetricSpace.chain([0, 1, 2])
        first = MappingTable.from_function(s, lambda U: U[0], 2)
        second = MappingTable.from_function(s, lambda U: U[1], 2)
        # F(x, y) = x fixes every pair; F(x, y) = y forces y = x
        assert enumerate_star_fixed(s, first, COUPLED) == set(itertools.product(range(3), repeat=2))
        assert enumerate_star_fixed(s, second, COUPLED) == {(a, a) for a in range(3)}

    def test_sets_match_brute_force(self):
        rng = np.random.default_rng(5)
        for _ in range(30):
            inst = random_instance(rng, max_size=3)
            sets = enumerate_star_coincidence(inst.space, inst.F, inst.g, inst.op)
            assert sets.coincidence == _brute_coincidence(inst.space, inst.F, inst.g, inst.op)
            assert sets.points == {tuple(inst.g(x) for x in U) for U in sets.coincidence}
            assert sets.common_fixed == {U for U in sets.coincidence
                                         if all(inst.g(x) == x for x in U)}

    def test_refusals(self):
        with pytest.raises(InfiniteSpaceUndecidable):
            enumerate_star_fixed(RealSpace(), lambda U: 0.0, COUPLED)
        s = FiniteOrderedMetricSpace.chain(list(range(4)))
        with pytest.raises(SizeLimit):
            enumerate_star_fixed(s, lambda U: 0, COUPLED, cap=10)


class TestCertify:
    @pytest.mark.parametrize("theorem", ["T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9"])
    def test_chain_instance(self, theorem):
        cert = certify_theorem(load_instance("finite_chain_t1"), theorem)
        assert cert.verdict
        assert cert.sets["coincidence"] == [[1, 1]]
        assert all(h["holds"] for h in cert.hypotheses.values())

    def test_antichain_refuses_uniqueness(self):
        inst = load_instance("finite_antichain")
        with pytest.raises(HypothesesNotMachineVerified) as exc:
            certify_theorem(inst, "T2")
        assert "directed" in exc.value.report["failed"]

    def test_unknown_theorem(self):
        with pytest.raises(ValueError):
            certify_theorem(load_instance("finite_chain_t1"), "T10")

    def test_expanding_map_refused(self):
        s = FiniteOrderedMetricSpace.chain([0, 1, 2])
        F = MappingTable.from_function(s, lambda U: U[0], 2)
        inst = ProblemInstance(space=s, F=F, op=COUPLED, part=HALVES, phi=linear("1/2"))
        with pytest.raises(HypothesesNotMachineVerified) as exc:
            certify_theorem(inst, "T1")
        assert "contraction" in exc.value.report["failed"]


class TestGenerators:
    def test_poset_counts(self):
        # labelled posets on 1, 2, 3 points
        assert [len(all_posets(m)) for m in (1, 2, 3)] == [1, 3, 19]

    def test_random_pieces_are_valid(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            m = int(rng.integers(1, 5))
            space = random_space(rng, m)
            assert validate_space(space) == []
            part = random_partition(rng, 3)
            assert is_member_U(random_op_in_U(rng, part), part)
            Fm = mixed_monotone_table(rng, space, IDENTITY, part)
            inst = ProblemInstance(space=space, F=Fm, op=random_op_in_U(rng, part), part=part,
                                   phi=linear(0))
            assert check_mixed_monotone(inst).holds

    def test_random_instance_deterministic(self):
        a = random_instance(np.random.default_rng(11))
        b = random_instance(np.random.default_rng(11))
        assert a.F.table == b.F.table and a.op == b.op


class TestLemmaSuite:
    def test_small_run_clean(self):
        rep = lemma_suite(max_size=2, max_n=3, trials=10, samples=500, seed=1)
        assert rep["ok"] and rep["violations"] == 0
        assert rep["checks"]["delta_nabla_sandwich"]["cases"] > 0
        assert rep == lemma_suite(max_size=2, max_n=3, trials=10, samples=500, seed=1)

    def test_degenerate_bound_warns(self):
        rep = lemma_suite(max_size=1, max_n=2, trials=2, samples=50)
        assert rep["warnings"] and rep["ok"]

    def test_bad_bounds(self):
        with pytest.raises(ValueError):
            lemma_suite(max_n=1)
