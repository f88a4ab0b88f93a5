"""Hypothesis checks and the Picard-style *-coincidence iteration.

The iteration runs on the lifted pair ``(F_*, G)``: given ``U^(m)`` it picks
``U^(m+1)`` with ``G(U^(m+1)) = F_*(U^(m))`` through a section of g, and it
stops once successive G-images agree to within ``tol`` (exactly, on finite
spaces).

On finite spaces every check is exhaustive and exact.  On a
:class:`~ntupled.spaces.RealSpace` the checks draw seeded random samples and
say so in their provenance; they never claim a hypothesis is verified.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .contractions import (
    ControlFunction,
    check_below_identity,
    check_increasing,
    default_grid,
    implied_classes,
    linear,
)
from .errors import (
    FormPreconditionUnmet,
    GateFailed,
    InfiniteSpaceUndecidable,
    NoInitialPoint,
    PreconditionUnmet,
    SectionFailure,
)
from .index_algebra import BinaryOp, Partition, is_member_U, is_permuted
from .product_lift import (
    apply_F_star,
    apply_G,
    delta_n,
    nabla_n,
    orientation,
    product_leq,
)
from .spaces import (
    IDENTITY,
    AssumptionSet,
    Identity,
    all_tuples,
    check_one_one,
    check_weak_star_compat,
    finite_assumptions,
)

__all__ = [
    "FORMS",
    "MODES",
    "ProblemInstance",
    "CheckReport",
    "IterationTrace",
    "SolveResult",
    "check_mixed_monotone",
    "check_contraction",
    "check_range_condition",
    "find_initial",
    "iterate",
    "solve",
    "check_uniqueness_hypothesis",
]

FORMS = ("sum", "max", "pointwise-sum", "pointwise-max", "weighted-linear")
MODES = ("compatible", "range", "fixed-point")

DEFAULT_REAL_TOL = 1e-10
FLOAT_SLACK = 1e-12
STALL_STEPS = 50
MAX_STORED_VIOLATIONS = 20


@dataclass
class ProblemInstance:
    """Everything the solver and the oracle need about one problem.

    ``F`` takes an n-tuple, ``g`` a single point.  ``g_section`` is a right
    inverse of ``g``; it is only needed on a real space with non-identity g.
    ``E`` restricts the range condition on finite spaces (default: the whole
    carrier).  ``samples`` and ``seed`` control the sampled checks on real
    spaces.
    """

    space: Any
    F: Callable
    op: BinaryOp
    part: Partition
    g: Callable = IDENTITY
    phi: ControlFunction | None = None
    contraction_form: str = "sum"
    weights: tuple | None = None
    assumptions: AssumptionSet = field(default_factory=AssumptionSet)
    mode: str = "compatible"
    g_section: Callable | None = None
    E: frozenset | None = None
    initial: tuple | None = None
    samples: int = 10_000
    seed: int = 0
    name: str = ""

    def __post_init__(self):
        if self.op.n != self.part.n:
            raise ValueError(f"operation has n={self.op.n}, partition has n={self.part.n}")
        if self.contraction_form not in FORMS:
            raise ValueError(f"unknown contraction form {self.contraction_form!r}")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.contraction_form == "weighted-linear":
            if self.weights is None or len(self.weights) != self.op.n:
                raise ValueError("weighted-linear form needs n weights")
            if any(a < 0 for a in self.weights) or not sum(self.weights) < 1:
                raise ValueError("weights must be nonnegative with sum < 1")
        elif self.phi is None:
            raise ValueError("a control function is required for this form")
        if self.mode == "fixed-point" and not self.g_is_identity():
            raise ValueError("fixed-point mode needs g = identity")

    @property
    def n(self) -> int:
        return self.op.n

    @property
    def finite(self) -> bool:
        return bool(getattr(self.space, "is_finite", False))

    def g_is_identity(self) -> bool:
        if isinstance(self.g, Identity):
            return True
        if self.finite:
            return all(self.g(x) == x for x in self.space.elements)
        return False

    def effective_phi(self) -> ControlFunction:
        """Control function of the lifted contraction.

        Weighted-linear contractions reduce to the max form with
        ``phi(t) = (sum of weights) * t``.
        """
        if self.contraction_form == "weighted-linear":
            return linear(sum(self.weights))
        return self.phi

    def lifted_metric(self) -> str:
        return "delta" if self.contraction_form in ("sum", "pointwise-sum") else "nabla"


@dataclass
class CheckReport:
    name: str
    holds: bool
    provenance: str
    cases: int = 0
    violations: list = field(default_factory=list)
    violation_count: int = 0
    notes: list = field(default_factory=list)

    def __bool__(self):
        return self.holds

    def add(self, violation):
        self.violation_count += 1
        if len(self.violations) < MAX_STORED_VIOLATIONS:
            self.violations.append(violation)

    def to_dict(self):
        return {
            "name": self.name,
            "holds": self.holds,
            "provenance": self.provenance,
            "cases": self.cases,
            "violation_count": self.violation_count,
            "violations": [_jsonable(v) for v in self.violations],
            "notes": list(self.notes),
        }


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, float):
        return v if math.isfinite(v) else str(v)
    return str(v)


def _provenance(inst):
    return "machine-verified" if inst.finite else "sampled"


def _rng(inst):
    return np.random.default_rng(inst.seed)


def _le(a, b) -> bool:
    """``a <= b`` exactly for fractions, with a relative slack for floats."""
    if isinstance(a, float) or isinstance(b, float):
        return a <= b + FLOAT_SLACK * max(1.0, abs(b))
    return a <= b


# ----------------------------------------------------------------------------
# sampling helpers for real spaces

def _random_tuples(inst, rng, count):
    pts = inst.space.sample(rng, count * inst.n)
    return [tuple(pts[j * inst.n:(j + 1) * inst.n]) for j in range(count)]


def _clip(space, x):
    if space.bounds is None:
        return x
    lo, hi = space.bounds
    if space.dim == 1:
        return min(max(x, lo), hi)
    return tuple(min(max(c, lo), hi) for c in x)


def _shift(space, x, step):
    if space.dim == 1:
        return _clip(space, x + step)
    return _clip(space, tuple(c + step for c in x))


def _sample_pairs(inst, rng, count):
    """Pairs of n-tuples, two thirds built to be ordered in the product order.

    Ordered pairs are produced by moving A coordinates one way and B
    coordinates the other; that yields G-comparable pairs whenever g is
    monotone.  The remaining third is uniform.
    """
    space, part = inst.space, inst.part
    lo, hi = space.bounds if space.bounds is not None else (-10.0, 10.0)
    scale = (hi - lo) / 4
    starts = _random_tuples(inst, rng, count)
    steps = np.abs(rng.normal(0.0, scale, size=(count, inst.n)))
    zero_mask = rng.random(size=(count, inst.n)) < 0.25
    steps[zero_mask] = 0.0
    signs = rng.choice([-1.0, 1.0], size=count)
    others = _random_tuples(inst, rng, count)
    pairs = []
    for j, U in enumerate(starts):
        if j % 3 == 2:
            pairs.append((U, others[j]))
            continue
        V = tuple(
            _shift(space, x, float(signs[j] * steps[j][i - 1] * (1 if i in part.A else -1)))
            for i, x in enumerate(U, 1)
        )
        pairs.append((U, V))
    return pairs


# ----------------------------------------------------------------------------
# hypothesis checks

def check_mixed_monotone(inst: ProblemInstance) -> CheckReport:
    """F is g-increasing in the A arguments and g-decreasing in the B ones.

    A violation is recorded as ``(position, lower_args, upper_args)`` where
    ``g`` of the moved argument increases from lower to upper.
    """
    rep = CheckReport("mixed_monotone", True, _provenance(inst))
    n, part, space, F, g = inst.n, inst.part, inst.space, inst.F, inst.g

    def test(j, ctx, a, b):
        # requires g(a) <= g(b)
        lo = ctx[:j - 1] + (a,) + ctx[j - 1:]
        hi = ctx[:j - 1] + (b,) + ctx[j - 1:]
        fa, fb = F(lo), F(hi)
        rep.cases += 1
        ok = space.leq(fa, fb) if j in part.A else space.leq(fb, fa)
        if not ok and not inst.finite and space.dim == 1:
            ok = math.isclose(fa, fb, rel_tol=FLOAT_SLACK, abs_tol=FLOAT_SLACK)
        if not ok:
            rep.holds = False
            rep.add({"position": j, "lower": lo, "upper": hi})

    if inst.finite:
        X = space.elements
        gpairs = [(a, b) for a in X for b in X if space.leq(g(a), g(b))]
        for j in range(1, n + 1):
            for ctx in itertools.product(X, repeat=n - 1):
                for a, b in gpairs:
                    test(j, ctx, a, b)
        return rep

    rng = _rng(inst)
    per = max(1, inst.samples // n)
    for j in range(1, n + 1):
        ctxs = _random_tuples(inst, rng, per)
        ab = space.sample(rng, 2 * per)
        for t in range(per):
            a, b = ab[2 * t], ab[2 * t + 1]
            ga, gb = g(a), g(b)
            if space.leq(ga, gb):
                test(j, ctxs[t][:n - 1], a, b)
            elif space.leq(gb, ga):
                test(j, ctxs[t][:n - 1], b, a)
    return rep


def _pointwise_max_proviso(inst, phi) -> tuple[bool, str]:
    if is_permuted(inst.op)[0]:
        return True, "operation is permuted"
    if inst.contraction_form == "weighted-linear" or phi.declared_class == "Linear":
        return True, "phi is linear, hence increasing"
    bad = check_increasing(phi, default_grid())
    if bad:
        return False, f"phi decreases on the sample grid, e.g. between {bad[0]}"
    return True, "phi sampled increasing on the default grid (declared)"


def _contraction_terms(inst, phi, U, V, FU, FV, GU, GV):
    """Left and right side of the selected contraction inequality."""
    space, form = inst.space, inst.contraction_form
    if form == "sum":
        return delta_n(FU, FV, space), phi(delta_n(GU, GV, space))
    if form == "max":
        return nabla_n(FU, FV, space), phi(nabla_n(GU, GV, space))
    lhs = space.dist(inst.F(U), inst.F(V))
    if form == "pointwise-sum":
        return lhs, phi(delta_n(GU, GV, space))
    if form == "pointwise-max":
        return lhs, phi(nabla_n(GU, GV, space))
    return lhs, sum(a * space.dist(x, y) for a, x, y in zip(inst.weights, GU, GV))


def check_contraction(inst: ProblemInstance) -> CheckReport:
    """Evaluate the selected contraction inequality on G-comparable pairs.

    Raises :class:`FormPreconditionUnmet` when a pointwise form is used
    without its proviso (permuted operation for the pointwise-sum form;
    permuted operation or increasing phi for the pointwise-max form).
    """
    form, phi = inst.contraction_form, inst.phi
    rep = CheckReport(f"contraction[{form}]", True, _provenance(inst))
    if form == "pointwise-sum" and not is_permuted(inst.op)[0]:
        raise FormPreconditionUnmet("the pointwise-sum form needs a permuted operation")
    if form == "pointwise-max":
        ok, why = _pointwise_max_proviso(inst, phi)
        if not ok:
            raise FormPreconditionUnmet("the pointwise-max form needs a permuted operation "
                                        "or an increasing phi: " + why)
        rep.notes.append(why)
    space, part, op, F, g = inst.space, inst.part, inst.op, inst.F, inst.g

    if inst.finite:
        tuples = list(all_tuples(space, inst.n))
        lifted = {U: (apply_F_star(F, op, U), apply_G(g, U)) for U in tuples}
        pairs = itertools.combinations(tuples, 2)
    else:
        pairs = _sample_pairs(inst, _rng(inst), inst.samples)
        lifted = None

    for U, V in pairs:
        if lifted is not None:
            (FU, GU), (FV, GV) = lifted[U], lifted[V]
        else:
            FU, GU = apply_F_star(F, op, U), apply_G(g, U)
            FV, GV = apply_F_star(F, op, V), apply_G(g, V)
        if orientation(GU, GV, part, space) == 0:
            continue
        rep.cases += 1
        lhs, rhs = _contraction_terms(inst, phi, U, V, FU, FV, GU, GV)
        if not _le(lhs, rhs):
            rep.holds = False
            rep.add({"U": U, "V": V, "lhs": lhs, "rhs": rhs})
    if rep.cases == 0:
        rep.notes.append("no comparable pairs were found; the inequality is vacuous on the sample")
    return rep


def check_range_condition(inst: ProblemInstance, mode: str | None = None) -> CheckReport:
    """Range condition of ``mode`` (default: the instance's mode).

    ``compatible``: F(X^n) in g(X) & E.  ``range``: F(X^n) in E in g(X).
    ``fixed-point``: F(X^n) in E.  Only decidable on finite spaces; on real
    spaces the declared flag is reported.
    """
    mode = inst.mode if mode is None else mode
    if not inst.finite:
        flag = "range_noncompatible" if mode == "range" else "range_compatible"
        a = inst.assumptions.get(flag)
        holds = bool(a and a.value) or inst.g_is_identity()
        rep = CheckReport("range_condition", holds, "declared")
        if inst.g_is_identity():
            rep.notes.append("g is the identity, so g(X) = X")
        return rep
    space, F, g = inst.space, inst.F, inst.g
    E = set(space.elements) if inst.E is None else set(inst.E)
    f_img = {F(U) for U in all_tuples(space, inst.n)}
    g_img = {g(x) for x in space.elements}
    if mode == "compatible":
        holds = f_img <= (g_img & E)
    elif mode == "range":
        holds = f_img <= E <= g_img
    else:
        holds = f_img <= E
    rep = CheckReport("range_condition", holds, "machine-verified",
                      cases=len(f_img))
    if not holds:
        rep.add({"F_image_outside": sorted(map(repr, f_img - (g_img & E)))})
    return rep


def _candidate_starts(inst, candidates):
    for c in ([inst.initial] if inst.initial is not None else []) + list(candidates or []):
        yield tuple(c)
    if inst.finite:
        yield from all_tuples(inst.space, inst.n)
    else:
        yield from itertools.product(inst.space.grid(), repeat=inst.n)


def find_initial(inst: ProblemInstance, candidates=None) -> tuple[tuple, int]:
    """First start ``U`` with ``G(U)`` ordered against ``F_*(U)``.

    Returns ``(U, orientation)`` where orientation ``+1`` means
    ``G(U) <= F_*(U)`` in the product order and ``-1`` the reverse.
    """
    for U in _candidate_starts(inst, candidates):
        if len(U) != inst.n:
            continue
        GU, FU = apply_G(inst.g, U), apply_F_star(inst.F, inst.op, U)
        if product_leq(GU, FU, inst.part, inst.space):
            return U, 1
        if product_leq(FU, GU, inst.part, inst.space):
            return U, -1
    raise NoInitialPoint("no candidate satisfies the ordering condition on the start")


# ----------------------------------------------------------------------------
# iteration

@dataclass
class IterationTrace:
    """Iterates ``U^(0), U^(1), ...`` with residuals between G-images.

    ``delta_residuals[m-1]`` and ``nabla_residuals[m-1]`` compare
    ``G(U^(m))`` with ``G(U^(m-1))``.
    """

    tuples: list = field(default_factory=list)
    g_images: list = field(default_factory=list)
    delta_residuals: list = field(default_factory=list)
    nabla_residuals: list = field(default_factory=list)
    status: str = "running"
    answer: tuple | None = None

    @property
    def steps(self) -> int:
        return len(self.tuples) - 1

    def records(self):
        """One dict per iterate, in the line-delimited trace format."""
        out = []
        for m, U in enumerate(self.tuples):
            out.append({
                "m": m,
                "tuple": _jsonable(U),
                "delta_residual": None if m == 0 else _jsonable(self.delta_residuals[m - 1]),
                "nabla_residual": None if m == 0 else _jsonable(self.nabla_residuals[m - 1]),
            })
        return out


def _section(inst):
    if inst.finite:
        table = {}
        for x in inst.space.elements:
            table.setdefault(inst.g(x), x)

        def pick(y):
            if y not in table:
                raise KeyError(y)
            return table[y]
        return pick
    if inst.g_section is not None:
        return inst.g_section
    if isinstance(inst.g, Identity):
        return inst.g.section
    raise PreconditionUnmet("a non-identity g on a real space needs a user-supplied right inverse")


def iterate(inst: ProblemInstance, U0: tuple, tol=None, max_iters: int = 1000) -> IterationTrace:
    """Run the Picard scheme ``g(x_i^(m+1)) = F(U^(m) sliced by row i)``.

    Finite spaces stop when ``F_*(U^(m)) = G(U^(m))`` exactly, so the answer
    is a certified *-coincidence point, and report ``stalled`` when the
    G-images enter a cycle.  Real spaces stop when the max residual falls
    to ``tol``; the answer is then the last iterate.
    """
    if tol is None:
        tol = 0 if inst.finite else DEFAULT_REAL_TOL
    space, op, F, g = inst.space, inst.op, inst.F, inst.g
    section = _section(inst)
    trace = IterationTrace()
    U = tuple(U0)
    GU = apply_G(g, U)
    trace.tuples.append(U)
    trace.g_images.append(GU)
    seen = {GU} if inst.finite else None
    worse = 0
    for _ in range(max_iters):
        target = apply_F_star(F, op, U)
        if target == GU:
            trace.status, trace.answer = "converged", U
            return trace
        try:
            nxt = tuple(section(y) for y in target)
        except (KeyError, ValueError, ZeroDivisionError) as exc:
            trace.status = "section_failure"
            raise SectionFailure(f"no preimage under g for an image of F: {exc}", trace) from None
        if not inst.finite:
            if not all(x in space for x in nxt) or not all(
                    math.isclose(g(x), y, rel_tol=1e-9, abs_tol=1e-12) for x, y in zip(nxt, target)):
                trace.status = "section_failure"
                raise SectionFailure("the supplied section is not a right inverse of g here", trace)
        Gn = target if inst.finite else apply_G(g, nxt)
        d_res, n_res = delta_n(Gn, GU, space), nabla_n(Gn, GU, space)
        if trace.nabla_residuals and not n_res < trace.nabla_residuals[-1]:
            worse += 1
        else:
            worse = 0
        trace.tuples.append(nxt)
        trace.g_images.append(Gn)
        trace.delta_residuals.append(d_res)
        trace.nabla_residuals.append(n_res)
        U, GU = nxt, Gn
        if not inst.finite:
            if not math.isfinite(n_res):
                trace.status = "stalled"
                return trace
            if n_res <= tol:
                trace.status, trace.answer = "converged", U
                return trace
        elif GU in seen:
            trace.status = "stalled"
            return trace
        else:
            seen.add(GU)
        if worse >= STALL_STEPS:
            trace.status = "stalled"
            return trace
    trace.status = "max_iters"
    return trace


# ----------------------------------------------------------------------------
# driver

@dataclass
class SolveResult:
    answer: tuple | None
    trace: IterationTrace
    report: dict
    orientation: int

    @property
    def converged(self) -> bool:
        return self.trace.status == "converged"


def _descent_report(inst, trace) -> CheckReport:
    """Residual contraction along the trajectory and phi(t) < t at every
    residual actually produced."""
    phi = inst.effective_phi()
    residuals = trace.delta_residuals if inst.lifted_metric() == "delta" else trace.nabla_residuals
    rep = CheckReport("descent", True, "machine-verified" if inst.finite else "computed")
    for m in range(1, len(residuals)):
        rep.cases += 1
        if not _le(residuals[m], phi(residuals[m - 1])):
            rep.holds = False
            rep.add({"step": m + 1, "residual": residuals[m], "bound": phi(residuals[m - 1])})
    positive = [r for r in residuals if r > 0]
    below = check_below_identity(phi, positive)
    if below:
        rep.holds = False
        rep.notes.append(f"phi(t) < t fails at residuals {[str(t) for t in below[:5]]}")
    return rep


def _trajectory_report(inst, trace, sign) -> CheckReport:
    rep = CheckReport("monotone_trajectory", True, "computed")
    for m in range(1, len(trace.g_images)):
        rep.cases += 1
        a, b = trace.g_images[m - 1], trace.g_images[m]
        ok = product_leq(a, b, inst.part, inst.space) if sign > 0 else \
            product_leq(b, a, inst.part, inst.space)
        if not ok:
            rep.holds = False
            rep.add({"step": m})
    return rep


def _assumption_report(inst):
    if inst.finite:
        return finite_assumptions(inst.space, inst.F, inst.g, inst.op, inst.E,
                                  {k: v.value for k, v in inst.assumptions.flags.items()}).to_dict()
    return inst.assumptions.to_dict()


def _phi_report(inst):
    if inst.contraction_form == "weighted-linear":
        return {"name": "weighted-linear", "weights": [str(a) for a in inst.weights],
                "classes": sorted(implied_classes("Linear"))}
    phi = inst.phi
    out = phi.to_dict()
    out["classes"] = sorted(implied_classes(phi.declared_class))
    out["grid_violations"] = [str(t) for t in check_below_identity(phi, default_grid())]
    return out


def solve(inst: ProblemInstance, tol=None, max_iters: int = 1000, candidates=None) -> SolveResult:
    """Gate the hypotheses, pick a start, iterate.

    Gates, in order: the operation lies in U for the partition, mixed
    g-monotonicity, the contraction inequality, an ordered start.  A failed
    gate raises :class:`GateFailed` with the report gathered so far.
    """
    report = {"instance": inst.name, "mode": inst.mode, "n": inst.n,
              "matrix": inst.op.rows, "partition": {"A": sorted(inst.part.A), "B": sorted(inst.part.B)}}
    member = is_member_U(inst.op, inst.part)
    report["in_U"] = {"holds": member.member,
                      "witnesses": [[list(w.pair), w.value, w.condition] for w in member.witnesses]}
    if not member:
        raise GateFailed("NotInU", report)
    report["permuted"] = is_permuted(inst.op)[0]

    mono = check_mixed_monotone(inst)
    report["mixed_monotone"] = mono.to_dict()
    if not mono:
        raise GateFailed("MonotoneViolation", report)

    try:
        contraction = check_contraction(inst)
    except FormPreconditionUnmet as exc:
        report["contraction"] = {"holds": False, "error": str(exc)}
        raise GateFailed("ContractionViolation", report) from exc
    report["contraction"] = contraction.to_dict()
    if not contraction:
        raise GateFailed("ContractionViolation", report)
    report["phi"] = _phi_report(inst)
    report["range_condition"] = check_range_condition(inst).to_dict()
    report["assumptions"] = _assumption_report(inst)

    try:
        U0, sign = find_initial(inst, candidates)
    except NoInitialPoint:
        raise GateFailed("NoInitialPoint", report) from None
    report["initial"] = {"tuple": _jsonable(U0), "orientation": sign}

    trace = iterate(inst, U0, tol=tol, max_iters=max_iters)
    report["status"] = trace.status
    report["steps"] = trace.steps
    report["descent"] = _descent_report(inst, trace).to_dict()
    report["trajectory"] = _trajectory_report(inst, trace, sign).to_dict()
    report["answer"] = _jsonable(trace.answer)
    return SolveResult(trace.answer, trace, report, sign)


def _directedness(inst):
    """Every pair of G-images has a common comparable G-image."""
    space, part = inst.space, inst.part
    g_img = sorted({inst.g(x) for x in space.elements}, key=space.index)
    images = list(itertools.product(g_img, repeat=inst.n))
    masks = []
    for P in images:
        m = 0
        for j, Q in enumerate(images):
            if orientation(P, Q, part, space) != 0:
                m |= 1 << j
        masks.append(m)
    for a, b in itertools.combinations(range(len(images)), 2):
        if not masks[a] & masks[b]:
            return False, (images[a], images[b]), len(images)
    return True, None, len(images)


def check_uniqueness_hypothesis(inst: ProblemInstance, one_one: bool = False,
                                weak_compat: bool = False) -> CheckReport:
    """Extra hypotheses of the uniqueness theorems on a finite space.

    Always checks directedness of the G-images under the product order;
    optionally injectivity of g and weak *-compatibility.
    """
    if not inst.finite:
        raise InfiniteSpaceUndecidable("uniqueness hypotheses are decided only on finite spaces")
    rep = CheckReport("uniqueness_hypotheses", True, "machine-verified")
    ok, witness, count = _directedness(inst)
    rep.cases = count
    if not ok:
        rep.holds = False
        rep.add({"directedness": witness})
    rep.notes.append(f"directed: {ok}")
    if one_one:
        inj = check_one_one(inst.g, inst.space)
        rep.notes.append(f"g one-one: {inj.holds}")
        if not inj:
            rep.holds = False
            rep.add({"g_not_one_one": inj.witness})
    if weak_compat:
        wc = check_weak_star_compat(inst.F, inst.g, inst.op, inst.space)
        rep.notes.append(f"weakly *-compatible: {wc.holds}")
        if not wc:
            rep.holds = False
            rep.add({"not_weakly_compatible": wc.witness})
    return rep
