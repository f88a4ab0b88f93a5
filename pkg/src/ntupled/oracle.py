"""Brute-force ground truth on finite ordered metric spaces.

Everything here enumerates: solution sets are computed by scanning all of
``X^n``, theorem conclusions are checked against those sets, and the lemma
suite compares independent computations of the same object.  Above a size
cap the oracle refuses instead of sampling.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .contractions import linear
from .errors import (
    FormPreconditionUnmet,
    HypothesesNotMachineVerified,
    InfiniteSpaceUndecidable,
    NoInitialPoint,
    SizeLimit,
)
from .index_algebra import (
    BinaryOp,
    Partition,
    build_from_matrix,
    is_member_U,
    is_permuted,
    to_upsilon,
)
from .product_lift import (
    apply_F_star,
    apply_G,
    delta_n,
    lemma4_check,
    lemma6_check,
    nabla_n,
    orientation,
    product_leq,
    slice_,
)
from .solver import (
    ProblemInstance,
    check_contraction,
    check_mixed_monotone,
    check_range_condition,
    check_uniqueness_hypothesis,
    find_initial,
)
from .spaces import (
    IDENTITY,
    FiniteOrderedMetricSpace,
    MappingTable,
    RealSpace,
    all_tuples,
    check_one_one,
    check_weak_star_compat,
)

__all__ = [
    "DEFAULT_CAP",
    "THEOREMS",
    "CoincidenceSets",
    "Certificate",
    "enumerate_star_fixed",
    "enumerate_star_coincidence",
    "certify_theorem",
    "lemma_suite",
    "all_posets",
    "random_poset",
    "random_space",
    "random_partition",
    "random_op_in_U",
    "random_table",
    "random_self_map",
    "mixed_monotone_table",
    "random_instance",
]

DEFAULT_CAP = 10 ** 7


def _require_finite(space):
    if not getattr(space, "is_finite", False):
        raise InfiniteSpaceUndecidable("the oracle requires a finite space")


def _guard(space, n, cap):
    _require_finite(space)
    if space.size ** n > cap:
        raise SizeLimit(f"{space.size}^{n} tuples exceeds the cap of {cap}")


def _slices(U, op):
    # index arithmetic written out, independent of product_lift
    n = op.n
    return [tuple(U[op(i, k) - 1] for k in range(1, n + 1)) for i in range(1, n + 1)]


def enumerate_star_fixed(space, F, op: BinaryOp, cap: int = DEFAULT_CAP) -> set:
    """All ``U`` with ``F(U sliced by row i) = x_i`` for every ``i``."""
    _guard(space, op.n, cap)
    return {U for U in all_tuples(space, op.n)
            if all(F(s) == x for s, x in zip(_slices(U, op), U))}


class CoincidenceSets(NamedTuple):
    coincidence: set  # tuples with F(slice_i) = g(x_i) for every i
    points: set  # their G-images
    common_fixed: set  # coincidence tuples with g(x_i) = x_i


def enumerate_star_coincidence(space, F, g, op: BinaryOp, cap: int = DEFAULT_CAP) -> CoincidenceSets:
    _guard(space, op.n, cap)
    coincidence = {U for U in all_tuples(space, op.n)
                   if all(F(s) == g(x) for s, x in zip(_slices(U, op), U))}
    points = {tuple(g(x) for x in U) for U in coincidence}
    common = {U for U in coincidence if all(g(x) == x for x in U)}
    return CoincidenceSets(coincidence, points, common)


# ----------------------------------------------------------------------------
# theorem certificates

THEOREMS = ("T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9")

# extra hypotheses on top of the base bundle of each family
_EXTRAS = {
    "T1": (), "T2": ("directed",), "T3": ("directed", "g_one_one"),
    "T4": (), "T5": ("directed",), "T6": ("directed", "g_one_one"),
    "T7": ("directed", "weakly_star_compatible"),
    "T8": (), "T9": ("directed",),
}

_CONCLUSIONS = {
    "T1": "the *-coincidence set is nonempty",
    "T2": "exactly one point of *-coincidence and exactly one common *-fixed point",
    "T3": "exactly one *-coincidence point",
    "T4": "the *-coincidence set is nonempty",
    "T5": "exactly one point of *-coincidence",
    "T6": "exactly one *-coincidence point",
    "T7": "exactly one common *-fixed point",
    "T8": "the *-fixed set is nonempty",
    "T9": "exactly one *-fixed point",
}


@dataclass
class Certificate:
    theorem: str
    hypotheses: dict
    conclusion: str
    verdict: bool
    sets: dict = field(default_factory=dict)
    witness: object = None

    def to_dict(self):
        return {
            "theorem": self.theorem,
            "hypotheses": self.hypotheses,
            "conclusion": self.conclusion,
            "verdict": self.verdict,
            "sets": self.sets,
            "witness": self.witness,
        }


def _realized_distances(inst):
    """Positive lifted distances between G-images of comparable pairs."""
    space, part = inst.space, inst.part
    g_img = sorted({inst.g(x) for x in space.elements}, key=space.index)
    metric = delta_n if inst.lifted_metric() == "delta" else nabla_n
    out = set()
    for P, Q in itertools.combinations(itertools.product(g_img, repeat=inst.n), 2):
        if orientation(P, Q, part, space):
            t = metric(P, Q, space)
            if t > 0:
                out.add(t)
    return sorted(out)


def _hyp(holds, provenance="machine-verified", note=""):
    d = {"holds": bool(holds), "provenance": provenance}
    if note:
        d["note"] = note
    return d


def _hypotheses(inst: ProblemInstance, theorem: str) -> dict:
    family = {"T1": 1, "T2": 1, "T3": 1, "T4": 4, "T5": 4, "T6": 4, "T7": 4, "T8": 8, "T9": 8}[theorem]
    space = inst.space
    vac = "vacuous-on-finite"
    h = {}
    h["operation_in_U"] = _hyp(is_member_U(inst.op, inst.part).member)
    h["E_o_complete"] = _hyp(True, vac, "monotone convergent sequences are eventually constant")
    if family == 8:
        h["g_identity"] = _hyp(inst.g_is_identity())
    mode = {1: "compatible", 4: "range", 8: "fixed-point"}[family]
    h["range_condition"] = _hyp(check_range_condition(inst, mode).holds)
    h["mixed_monotone"] = _hyp(check_mixed_monotone(inst).holds)
    if family == 1:
        wc = check_weak_star_compat(inst.F, inst.g, inst.op, space).holds
        h["star_o_compatible"] = _hyp(wc, note="equivalent to weak *-compatibility on a finite space")
        h["g_o_continuous"] = _hyp(True, vac)
        h["F_o_continuous_or_g_mcb"] = _hyp(True, vac)
    elif family == 4:
        h["continuity_or_mcb"] = _hyp(True, vac, "F and g are continuous for the discrete topology")
    else:
        h["F_o_continuous_or_mcb"] = _hyp(True, vac)
    try:
        find_initial(inst)
        h["initial_point"] = _hyp(True)
    except NoInitialPoint:
        h["initial_point"] = _hyp(False)
    try:
        h["contraction"] = _hyp(check_contraction(inst).holds)
    except FormPreconditionUnmet as exc:
        h["contraction"] = _hyp(False, note=str(exc))
    phi = inst.effective_phi()
    bad = [t for t in _realized_distances(inst) if not phi(t) < t]
    h["phi_below_identity"] = _hyp(
        not bad, note="checked at every positive lifted distance between comparable G-images")
    for extra in _EXTRAS[theorem]:
        if extra == "directed":
            h["directed"] = _hyp(check_uniqueness_hypothesis(inst).holds)
        elif extra == "g_one_one":
            h["g_one_one"] = _hyp(check_one_one(inst.g, space).holds)
        else:
            h["weakly_star_compatible"] = _hyp(
                check_weak_star_compat(inst.F, inst.g, inst.op, space).holds)
    return h


def _key(space):
    return lambda U: tuple(space.index(x) for x in U)


def certify_theorem(inst: ProblemInstance, theorem: str, cap: int = DEFAULT_CAP) -> Certificate:
    """Machine-verify a theorem's hypotheses, then test its conclusion.

    Raises :class:`HypothesesNotMachineVerified` (carrying the hypothesis
    report) when any hypothesis fails; no claim about the conclusion is made
    in that case.
    """
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; expected one of {THEOREMS}")
    _guard(inst.space, inst.n, cap)
    hyps = _hypotheses(inst, theorem)
    failed = sorted(k for k, v in hyps.items() if not v["holds"])
    if failed:
        raise HypothesesNotMachineVerified(
            f"{theorem}: hypotheses not verified: {', '.join(failed)}",
            {"theorem": theorem, "hypotheses": hyps, "failed": failed})

    space = inst.space
    key = _key(space)
    sets = enumerate_star_coincidence(space, inst.F, inst.g, inst.op, cap)
    fixed = enumerate_star_fixed(space, inst.F, inst.op, cap) if theorem in ("T8", "T9") else None
    if theorem in ("T1", "T4"):
        verdict = bool(sets.coincidence)
    elif theorem == "T2":
        verdict = len(sets.points) == 1 and len(sets.common_fixed) == 1
    elif theorem in ("T3", "T6"):
        verdict = len(sets.coincidence) == 1
    elif theorem == "T5":
        verdict = len(sets.points) == 1
    elif theorem == "T7":
        verdict = len(sets.common_fixed) == 1
    elif theorem == "T8":
        verdict = bool(fixed)
    else:
        verdict = len(fixed) == 1
    listing = {
        "coincidence": [list(U) for U in sorted(sets.coincidence, key=key)],
        "points": [list(U) for U in sorted(sets.points, key=key)],
        "common_fixed": [list(U) for U in sorted(sets.common_fixed, key=key)],
    }
    if fixed is not None:
        listing["fixed"] = [list(U) for U in sorted(fixed, key=key)]
    witness = None
    pool = fixed if fixed is not None else sets.coincidence
    if pool:
        witness = list(min(pool, key=key))
    return Certificate(theorem, hyps, _CONCLUSIONS[theorem], verdict, listing, witness)


# ----------------------------------------------------------------------------
# generators

def all_posets(m: int) -> list[frozenset]:
    """Every partial order on ``range(m)``, as sets of ``(x, y)`` with ``x <= y``."""
    refl = {(x, x) for x in range(m)}
    off = [(x, y) for x in range(m) for y in range(m) if x != y]
    out = []
    for bits in range(1 << len(off)):
        rel = refl | {p for j, p in enumerate(off) if bits >> j & 1}
        if any((y, x) in rel for x, y in rel if x != y):
            continue
        if any((x, z) not in rel for x, y in rel for y2, z in rel if y == y2):
            continue
        out.append(frozenset(rel))
    return out


def random_poset(rng, m: int) -> frozenset:
    """Random order on ``range(m)``: random DAG along a shuffled order, then closed."""
    perm = [int(v) for v in rng.permutation(m)]
    rel = {(x, x) for x in range(m)}
    for a in range(m):
        for b in range(a + 1, m):
            if rng.random() < 0.5:
                rel.add((perm[a], perm[b]))
    changed = True
    while changed:
        extra = {(x, z) for x, y in rel for y2, z in rel if y == y2} - rel
        changed = bool(extra)
        rel |= extra
    return frozenset(rel)


def line_metric(rng, m: int) -> list[list[int]]:
    """Distances between ``m`` distinct random integer points on a line."""
    pts = sorted(int(v) for v in rng.choice(4 * m, size=m, replace=False))
    order = [int(v) for v in rng.permutation(m)]
    pos = [pts[order[i]] for i in range(m)]
    return [[abs(a - b) for b in pos] for a in pos]


def random_space(rng, m: int, leq=None) -> FiniteOrderedMetricSpace:
    leq = random_poset(rng, m) if leq is None else leq
    return FiniteOrderedMetricSpace(list(range(m)), line_metric(rng, m), leq)


def random_partition(rng, n: int) -> Partition:
    while True:
        mask = rng.random(n) < 0.5
        A = [i + 1 for i in range(n) if mask[i]]
        if 0 < len(A) < n:
            return Partition(n, A, [i + 1 for i in range(n) if not mask[i]])


def random_op_in_U(rng, part: Partition) -> BinaryOp:
    A, B = sorted(part.A), sorted(part.B)
    rows = []
    for i in range(1, part.n + 1):
        row = []
        for k in range(1, part.n + 1):
            block = A if (i in part.A) == (k in part.A) else B
            row.append(block[int(rng.integers(len(block)))])
        rows.append(row)
    return build_from_matrix(part.n, rows)


def random_table(rng, space, n: int) -> MappingTable:
    X = space.elements
    return MappingTable({U: X[int(rng.integers(len(X)))] for U in all_tuples(space, n)}, n)


def random_self_map(rng, space) -> MappingTable:
    X = space.elements
    return MappingTable({x: X[int(rng.integers(len(X)))] for x in X}, 1)


def _rank(space):
    # size of the down-set; strictly increasing along the order
    return {x: sum(1 for y in space.elements if space.leq(y, x)) for x in space.elements}


def _random_chain(rng, space):
    X = space.elements
    chain = [X[int(rng.integers(len(X)))]]
    while rng.random() < 0.7:
        ups = [y for y in X if y != chain[-1] and space.leq(chain[-1], y)]
        if not ups:
            break
        chain.append(ups[int(rng.integers(len(ups)))])
    return chain


def mixed_monotone_table(rng, space, g, part: Partition, weights=(0, 1, 2)) -> MappingTable:
    """A table with the mixed g-monotone property, for any g.

    ``F(U) = c[clamp(floor((sum_A a_k r(g x_k) - sum_B b_k r(g x_k)) / s) + c0)]``
    with ``r`` a strictly increasing rank and ``c`` a chain, so the
    property holds by construction.
    """
    n = part.n
    r = _rank(space)
    chain = _random_chain(rng, space)
    coef = [int(rng.choice(weights)) for _ in range(n)]
    scale = int(rng.integers(1, 4))
    offset = int(rng.integers(-2 * space.size, 2 * space.size + 1))
    table = {}
    for U in all_tuples(space, n):
        s = sum((c if i in part.A else -c) * r[g(x)] for i, (c, x) in enumerate(zip(coef, U), 1))
        j = math.floor(Fraction(s, scale)) + offset
        table[U] = chain[min(max(j, 0), len(chain) - 1)]
    return MappingTable(table, n)


def random_monotone_self_map(rng, space) -> MappingTable:
    """An increasing self-map through a random chain."""
    r = _rank(space)
    chain = _random_chain(rng, space)
    scale = int(rng.integers(1, 3))
    offset = int(rng.integers(-space.size, 1))
    return MappingTable(
        {x: chain[min(max(r[x] // scale + offset, 0), len(chain) - 1)] for x in space.elements}, 1)


_ALPHAS = (Fraction(1, 2), Fraction(2, 3), Fraction(3, 4), Fraction(9, 10))


def random_instance(rng, max_size: int = 4, n: int | None = None) -> ProblemInstance:
    """A random finite problem built to be contractive most of the time.

    F takes its values in a chain of at most two points at mutual distance
    1; every other pair of points sits at distance ``D >= n / alpha``.  F
    reads its arguments through a weakly increasing weight that ignores the
    cluster, so moving a G-image inside the cluster leaves F unchanged and
    moving it out pays at least ``D``.  The weight can still separate the
    two cluster points when something lies between them, and the initial
    point and range condition are not arranged; callers filter with the
    solver gates.
    """
    n = int(rng.choice([2, 3])) if n is None else n
    m = int(rng.integers(min(3, max_size), max_size + 1))
    leq = random_poset(rng, m)
    X = list(range(m))
    probe = FiniteOrderedMetricSpace(X, [[int(i != j) for j in X] for i in X], leq)
    for _ in range(10):
        chain = _random_chain(rng, probe)[:2]
        if len(chain) == 2:
            break
    alpha = _ALPHAS[int(rng.integers(len(_ALPHAS)))]
    far = math.ceil(n / alpha) + 1
    dist = [[0 if i == j else (1 if i in chain and j in chain else far) for j in X] for i in X]
    space = FiniteOrderedMetricSpace(X, dist, leq)
    part = random_partition(rng, n)
    op = random_op_in_U(rng, part)
    u = rng.random()
    g = IDENTITY if u < 0.5 else (random_monotone_self_map(rng, space) if u < 0.85
                                  else random_self_map(rng, space))
    weight = {x: sum(1 for y in X if y not in chain and space.leq(y, x)) for x in X}
    coef = [int(rng.choice([0, 1, 2])) for _ in range(n)]
    scale = int(rng.integers(1, 4))
    levels = {U: math.floor(Fraction(sum((c if i in part.A else -c) * weight[g(x)]
                                         for i, (c, x) in enumerate(zip(coef, U), 1)), scale))
              for U in all_tuples(space, n)}
    distinct = sorted(set(levels.values()))
    cut = distinct[int(rng.integers(1, len(distinct)))] if len(distinct) > 1 else distinct[0]
    F = MappingTable({U: chain[min(max(v - cut + 1, 0), len(chain) - 1)]
                      for U, v in levels.items()}, n)
    form = ("sum", "max")[int(rng.integers(2))]
    return ProblemInstance(space=space, F=F, g=g, op=op, part=part, phi=linear(alpha),
                           contraction_form=form)


# ----------------------------------------------------------------------------
# lemma suite

class _Tally:
    def __init__(self):
        self.checks = {}

    def add(self, name, ok, example=None):
        c = self.checks.setdefault(name, {"cases": 0, "violations": 0, "examples": []})
        c["cases"] += 1
        if not ok:
            c["violations"] += 1
            if len(c["examples"]) < 5:
                c["examples"].append(example)

    def note(self, name, cases=0):
        self.checks.setdefault(name, {"cases": 0, "violations": 0, "examples": []})["cases"] += cases


def _coincidence_points_lifted(tuples, Fs, Gs):
    """Coincidence data of the lifted pair, from precomputed images."""
    co = {U for U in tuples if Fs[U] == Gs[U]}
    pts = {Gs[U] for U in co}
    common = {U for U in co if Fs[U] == U}
    return co, pts, common


def _ops_in_U(part):
    n = part.n
    for flat in itertools.product(range(1, n + 1), repeat=n * n):
        op = BinaryOp(n, tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))
        if is_member_U(op, part):
            yield op


def _check_instance(t: _Tally, space, op, part, F, g, Fm, pairs=None):
    """Run every lemma on one finite instance.

    ``F`` is arbitrary, ``Fm`` has the mixed g-monotone property.  ``pairs``
    restricts the pairwise lemmas to a sample; ``None`` means all pairs.
    """
    n = op.n
    tuples = list(all_tuples(space, n))
    Fs = {U: apply_F_star(F, op, U) for U in tuples}
    Gs = {U: apply_G(g, U) for U in tuples}

    # coincidence sets through index arithmetic versus through the lift
    direct = enumerate_star_coincidence(space, F, g, op)
    co, pts, common = _coincidence_points_lifted(tuples, Fs, Gs)
    t.add("coincidence_tuples_match_lift", direct.coincidence == co)
    t.add("coincidence_points_match_lift", direct.points == pts)
    t.add("common_fixed_match_lift", direct.common_fixed == common)

    # a *-fixed point is the same as an upsilon-fixed point
    sigmas = to_upsilon(op).sigmas
    ups = {U for U in tuples
           if all(F(tuple(U[s[k] - 1] for k in range(n))) == U[i] for i, s in enumerate(sigmas))}
    t.add("star_fixed_equals_upsilon_fixed", ups == enumerate_star_fixed(space, F, op))

    if pairs is None:
        pairs = list(itertools.product(tuples, repeat=2))
    for U, V in pairs:
        GU, GV = Gs[U], Gs[V]
        for i in range(1, n + 1):
            t.add("slice_commutes_with_G", apply_G(g, slice_(U, op, i)) == slice_(GU, op, i),
                  {"U": U, "i": i})
        d, m = delta_n(GU, GV, space), nabla_n(GU, GV, space)
        t.add("delta_nabla_sandwich", m / n <= d <= m, {"U": U, "V": V})
        rep = lemma6_check(g, op, U, V, space)
        t.add("row_max_bounded_by_nabla", not rep.bound_failures, {"U": U, "V": V})
        if rep.permuted:
            t.add("permuted_row_average_equals_delta", not rep.sum_failures, {"U": U, "V": V})
            t.add("permuted_row_max_equals_nabla", not rep.max_failures, {"U": U, "V": V})
        elif rep.sum_failures or rep.max_failures:
            t.note("nonpermuted_row_deviations (expected, not violations)", 1)
        if product_leq(GU, GV, part, space):
            t.add("ordered_G_images_order_slices", not lemma4_check(g, op, part, U, V, space),
                  {"U": U, "V": V})
            FU = apply_F_star(Fm, op, U)
            FV = apply_F_star(Fm, op, V)
            t.add("lift_is_G_increasing", product_leq(FU, FV, part, space), {"U": U, "V": V})


def _check_monotone_sequences(t: _Tally, rng, space, part, length=8):
    """Convergence and monotonicity transfer between X^n and its coordinates."""
    n = part.n
    tuples = list(all_tuples(space, n))
    # eventually-constant sequences converge in every sense at once
    limit = tuples[int(rng.integers(len(tuples)))]
    cut = int(rng.integers(0, length))
    seq = [tuples[int(rng.integers(len(tuples)))] for _ in range(cut)] + [limit] * (length - cut)
    tail = seq[length // 2:]
    by_delta = all(delta_n(U, limit, space) == 0 for U in tail)
    by_nabla = all(nabla_n(U, limit, space) == 0 for U in tail)
    by_coord = all(all(space.dist(x, y) == 0 for x, y in zip(U, limit)) for U in tail)
    t.add("convergence_delta_nabla_coordinates", by_delta == by_nabla == by_coord)
    # product-order monotone walks have monotone coordinates
    U = tuples[int(rng.integers(len(tuples)))]
    walk = [U]
    for _ in range(length):
        ups = [V for V in tuples if product_leq(walk[-1], V, part, space)]
        walk.append(ups[int(rng.integers(len(ups)))])
    ok = all(
        (space.leq(a[i], b[i]) if i + 1 in part.A else space.leq(b[i], a[i]))
        for a, b in zip(walk, walk[1:]) for i in range(n))
    t.add("monotone_sequence_has_monotone_coordinates", ok, {"walk": walk})


def _check_real_sequences(t: _Tally, rng, n, count):
    """Quantitative form of the Cauchy and convergence transfer on R^n."""
    space = RealSpace()
    for _ in range(count):
        base = [float(v) for v in rng.uniform(-5, 5, size=n)]
        rates = rng.uniform(0.1, 0.9, size=n)
        seq = [tuple(b + float(rng.normal()) * r ** m for b, r in zip(base, rates)) for m in range(12)]
        ok = True
        for p, q in itertools.combinations(seq, 2):
            d, mx = delta_n(p, q, space), nabla_n(p, q, space)
            coord = max(abs(a - b) for a, b in zip(p, q))
            ok &= coord <= n * d + 1e-12 and coord <= mx + 1e-12 and mx <= n * d + 1e-12
        t.add("cauchy_transfer_real", ok)


def _check_permuted_equivalence(t: _Tally, n, limit, rng):
    full = set(range(1, n + 1))
    total = n ** (n * n)
    if total <= limit:
        flats = itertools.product(range(1, n + 1), repeat=n * n)
    else:
        flats = (tuple(int(v) + 1 for v in rng.integers(n, size=n * n)) for _ in range(limit))
    for flat in flats:
        op = BinaryOp(n, tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))
        rows_full = all(set(op.row(i)) == full for i in range(1, n + 1))
        t.add("permuted_iff_rows_are_full", is_permuted(op)[0] == rows_full, {"matrix": op.rows})


def lemma_suite(max_size: int = 3, max_n: int = 3, trials: int = 200, seed: int = 0,
                samples: int = 10_000) -> dict:
    """Check the structural lemmas on generated finite instances.

    For ``n = 2`` both partitions and every operation in U are run against
    ``trials`` seeded random ``(F, g)`` pairs, cycling through every poset
    on at most ``max_size`` points.  For ``3 <= n <= max_n`` each check runs on at
    least ``samples`` randomly drawn cases.  The report is deterministic for
    a fixed seed.
    """
    if max_size < 1 or max_n < 2 or trials < 1 or samples < 1:
        raise ValueError("bounds must be positive and max_n at least 2")
    rng = np.random.default_rng(seed)
    t = _Tally()
    warnings = []
    if max_size < 2:
        warnings.append("degenerate bound: with at most one point every check is vacuous")

    # exhaustive layer at n = 2
    n = 2
    parts = [Partition(2, [1], [2]), Partition(2, [2], [1])]
    posets = [(m, leq) for m in range(1, max_size + 1) for leq in all_posets(m)]
    for part in parts:
        for op in _ops_in_U(part):
            for j in range(trials):
                m, leq = posets[j % len(posets)]
                space = random_space(rng, m, leq)
                g = random_self_map(rng, space)
                F = random_table(rng, space, n)
                Fm = mixed_monotone_table(rng, space, g, part)
                mono = check_mixed_monotone(ProblemInstance(
                    space=space, F=Fm, g=g, op=op, part=part, phi=linear(0)))
                t.add("generator_is_mixed_monotone", mono.holds)
                _check_instance(t, space, op, part, F, g, Fm)
                _check_monotone_sequences(t, rng, space, part)
    _check_permuted_equivalence(t, 2, samples, rng)

    # sampled layer for larger n
    for n in range(3, max_n + 1):
        done = 0
        while done < samples:
            m = int(rng.integers(1, max_size + 1))
            space = random_space(rng, m)
            part = random_partition(rng, n)
            op = random_op_in_U(rng, part)
            g = random_self_map(rng, space)
            F = random_table(rng, space, n)
            Fm = mixed_monotone_table(rng, space, g, part)
            mono = check_mixed_monotone(ProblemInstance(
                space=space, F=Fm, g=g, op=op, part=part, phi=linear(0)))
            t.add("generator_is_mixed_monotone", mono.holds)
            tuples = list(all_tuples(space, n))
            picks = rng.integers(len(tuples), size=(50, 2))
            pairs = [(tuples[int(a)], tuples[int(b)]) for a, b in picks]
            # one pair in four is forced to have ordered G-images when possible
            for j in range(0, len(pairs), 4):
                U = pairs[j][0]
                ups = [V for V in tuples if product_leq(apply_G(g, U), apply_G(g, V), part, space)]
                pairs[j] = (U, ups[int(rng.integers(len(ups)))]) if ups else pairs[j]
            _check_instance(t, space, op, part, F, g, Fm, pairs)
            _check_monotone_sequences(t, rng, space, part)
            done += len(pairs)
        _check_permuted_equivalence(t, n, samples, rng)
        _check_real_sequences(t, rng, n, 200)
    _check_real_sequences(t, rng, 2, 200)

    for name, c in t.checks.items():
        c["examples"] = [_plain(e) for e in c["examples"]]
    violations = sum(c["violations"] for c in t.checks.values())
    return {
        "seed": seed,
        "bounds": {"max_size": max_size, "max_n": max_n, "trials": trials, "samples": samples},
        "checks": {k: t.checks[k] for k in sorted(t.checks)},
        "violations": violations,
        "warnings": warnings,
        "ok": violations == 0,
    }


def _plain(v):
    if isinstance(v, dict):
        return {k: _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, Fraction):
        return str(v)
    return v
