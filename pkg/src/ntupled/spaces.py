"""Ordered metric spaces, mapping tables and declared assumptions.

Finite spaces carry an explicit distance table (exact :class:`~fractions.Fraction`
values) and an explicit order relation, which makes every hypothesis of the
existence theorems decidable by enumeration.  :class:`RealSpace` stands for
the real line or a box in R^dim with the usual distance and the
coordinatewise order; its topological hypotheses can only be declared.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Hashable, Iterable, NamedTuple, Sequence

import numpy as np

from .errors import InfiniteSpaceUndecidable, PartialMapping, ShapeMismatch

__all__ = [
    "FiniteOrderedMetricSpace",
    "RealSpace",
    "MappingTable",
    "Identity",
    "IDENTITY",
    "Violation",
    "CheckResult",
    "Assumption",
    "AssumptionSet",
    "ASSUMPTION_FLAGS",
    "to_exact",
    "validate_space",
    "check_commuting",
    "check_weak_star_compat",
    "check_g_o_continuity",
    "check_g_increasing",
    "check_one_one",
    "image_of_F",
    "image_of_g",
    "finite_assumptions",
    "all_tuples",
]


def to_exact(value) -> Fraction:
    """Convert a number or a ``"p/q"`` string to an exact fraction.

    Floats go through their decimal repr, so ``0.1`` becomes ``1/10``.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not distances")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(str(value).strip())


class FiniteOrderedMetricSpace:
    """A finite set with a distance table and a partial order.

    Parameters
    ----------
    elements : sequence of hashable labels
    dist : square matrix in element order, or a mapping ``(x, y) -> d``
        Entries are stored as exact fractions.  With a mapping, missing
        diagonal entries default to 0 and ``(y, x)`` falls back to ``(x, y)``.
    leq : iterable of pairs ``(x, y)`` meaning ``x <= y``
    """

    is_finite = True

    def __init__(self, elements: Sequence[Hashable], dist, leq: Iterable[tuple]):
        self.elements = list(elements)
        self._index = {x: i for i, x in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ShapeMismatch("duplicate element labels")
        m = len(self.elements)
        if isinstance(dist, dict):
            table = [[None] * m for _ in range(m)]
            for i, x in enumerate(self.elements):
                for j, y in enumerate(self.elements):
                    if (x, y) in dist:
                        table[i][j] = to_exact(dist[(x, y)])
                    elif (y, x) in dist:
                        table[i][j] = to_exact(dist[(y, x)])
                    elif i == j:
                        table[i][j] = Fraction(0)
                    else:
                        raise ShapeMismatch(f"no distance given for ({x!r}, {y!r})")
        else:
            if len(dist) != m or any(len(r) != m for r in dist):
                raise ShapeMismatch(f"distance table must be {m}x{m}")
            table = [[to_exact(v) for v in r] for r in dist]
        self._dist = table
        self.leq_pairs = frozenset((x, y) for x, y in leq)

    @classmethod
    def chain(cls, elements: Sequence[Hashable], dist=None):
        """Total order in the given sequence; default distance ``|i - j|``."""
        m = len(elements)
        if dist is None:
            dist = [[abs(i - j) for j in range(m)] for i in range(m)]
        leq = [(elements[i], elements[j]) for i in range(m) for j in range(i, m)]
        return cls(elements, dist, leq)

    @classmethod
    def antichain(cls, elements: Sequence[Hashable], dist=None):
        m = len(elements)
        if dist is None:
            dist = [[int(i != j) for j in range(m)] for i in range(m)]
        return cls(elements, dist, [(x, x) for x in elements])

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        try:
            return x in self._index
        except TypeError:
            return False

    def index(self, x) -> int:
        return self._index[x]

    def dist(self, x, y) -> Fraction:
        return self._dist[self._index[x]][self._index[y]]

    def leq(self, x, y) -> bool:
        return (x, y) in self.leq_pairs

    def comparable(self, x, y) -> bool:
        return (x, y) in self.leq_pairs or (y, x) in self.leq_pairs

    def distance_table(self) -> list[list[Fraction]]:
        return [list(r) for r in self._dist]

    def __repr__(self):
        return f"FiniteOrderedMetricSpace({self.elements!r})"


@dataclass(frozen=True)
class RealSpace:
    """The real line (``bounds=None``) or a box in R^dim.

    Points are floats when ``dim == 1`` and tuples of floats otherwise.
    Distance is Euclidean; the order is coordinatewise.
    """

    dim: int = 1
    bounds: tuple[float, float] | None = None
    is_finite = False

    def dist(self, x, y) -> float:
        if self.dim == 1:
            return abs(float(x) - float(y))
        return math.dist(x, y)

    def leq(self, x, y) -> bool:
        if self.dim == 1:
            return x <= y
        return all(a <= b for a, b in zip(x, y))

    def comparable(self, x, y) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def __contains__(self, x) -> bool:
        coords = [x] if self.dim == 1 else list(x)
        if len(coords) != self.dim or not all(math.isfinite(c) for c in coords):
            return False
        if self.bounds is None:
            return True
        lo, hi = self.bounds
        return all(lo <= c <= hi for c in coords)

    def sample(self, rng: np.random.Generator, size: int):
        lo, hi = self.bounds if self.bounds is not None else (-10.0, 10.0)
        pts = rng.uniform(lo, hi, size=(size, self.dim))
        if self.dim == 1:
            return [float(v) for v in pts[:, 0]]
        return [tuple(float(c) for c in p) for p in pts]

    def grid(self, per_axis: int = 9):
        lo, hi = self.bounds if self.bounds is not None else (-2.0, 2.0)
        axis = [float(v) for v in np.linspace(lo, hi, per_axis)]
        if self.dim == 1:
            return axis
        return list(itertools.product(axis, repeat=self.dim))


class MappingTable:
    """An explicit finite mapping, called like a function.

    For ``F: X^n -> X`` the keys are n-tuples of labels; for ``g: X -> X``
    (``arity=1``) they are plain labels.
    """

    def __init__(self, table: dict, arity: int):
        self.table = dict(table)
        self.arity = arity

    def __call__(self, arg):
        try:
            return self.table[arg]
        except KeyError:
            raise PartialMapping(f"no image for {arg!r}") from None

    def problems(self, space: FiniteOrderedMetricSpace) -> list[str]:
        """List missing arguments and images outside the carrier."""
        out = []
        domain = all_tuples(space, self.arity) if self.arity > 1 else space.elements
        for arg in domain:
            if arg not in self.table:
                out.append(f"missing image for {arg!r}")
            elif self.table[arg] not in space:
                out.append(f"image of {arg!r} is {self.table[arg]!r}, not in the carrier")
        return out

    @classmethod
    def from_function(cls, space, fn: Callable, arity: int):
        if arity == 1:
            return cls({x: fn(x) for x in space.elements}, 1)
        return cls({u: fn(u) for u in all_tuples(space, arity)}, arity)

    def __repr__(self):
        return f"MappingTable(arity={self.arity}, size={len(self.table)})"


class Identity:
    """The identity self-map; it is its own section."""

    arity = 1

    def __call__(self, x):
        return x

    def section(self, y):
        return y

    def __repr__(self):
        return "IDENTITY"


IDENTITY = Identity()


class Violation(NamedTuple):
    axiom: str
    items: tuple


class CheckResult(NamedTuple):
    holds: bool
    witness: Any = None

    def __bool__(self):
        return self.holds


def all_tuples(space, n: int):
    return itertools.product(space.elements, repeat=n)


def validate_space(s: FiniteOrderedMetricSpace) -> list[Violation]:
    """Check the metric and partial-order axioms; empty list means valid."""
    out = []
    X = s.elements
    for x in X:
        if s.dist(x, x) != 0:
            out.append(Violation("zero self-distance", (x,)))
    for x, y in itertools.combinations(X, 2):
        dxy, dyx = s.dist(x, y), s.dist(y, x)
        if dxy != dyx:
            out.append(Violation("symmetry", (x, y)))
        if dxy < 0 or dyx < 0:
            out.append(Violation("nonnegativity", (x, y)))
        if dxy == 0 or dyx == 0:
            out.append(Violation("identity of indiscernibles", (x, y)))
    for x, y, z in itertools.product(X, repeat=3):
        if s.dist(x, z) > s.dist(x, y) + s.dist(y, z):
            out.append(Violation("triangle inequality", (x, y, z)))
    for pair in sorted(s.leq_pairs, key=repr):
        if pair[0] not in s or pair[1] not in s:
            out.append(Violation("unknown element", pair))
    for x in X:
        if not s.leq(x, x):
            out.append(Violation("reflexivity", (x,)))
    for x, y in itertools.combinations(X, 2):
        if s.leq(x, y) and s.leq(y, x):
            out.append(Violation("antisymmetry", (x, y)))
    for x, y, z in itertools.product(X, repeat=3):
        if s.leq(x, y) and s.leq(y, z) and not s.leq(x, z):
            out.append(Violation("transitivity", (x, y, z)))
    return out


def _require_finite(s):
    if not getattr(s, "is_finite", False):
        raise InfiniteSpaceUndecidable("exhaustive checks need a finite space")


def _arity(F, n):
    n = n if n is not None else getattr(F, "arity", None)
    if n is None:
        raise ValueError("arity of F is unknown; pass n")
    return n


def check_commuting(F, g, s, n: int | None = None) -> CheckResult:
    """``g(F(x_1..x_n)) == F(g x_1, ..., g x_n)`` for every n-tuple."""
    _require_finite(s)
    for u in all_tuples(s, _arity(F, n)):
        if g(F(u)) != F(tuple(g(x) for x in u)):
            return CheckResult(False, u)
    return CheckResult(True)


def check_weak_star_compat(F, g, op, s) -> CheckResult:
    """Commuted equality at every tuple that solves the coincidence system.

    The witness is the offending tuple.
    """
    _require_finite(s)
    n = op.n
    for u in all_tuples(s, n):
        slices = [tuple(u[op(i, k) - 1] for k in range(1, n + 1)) for i in range(1, n + 1)]
        images = [F(sl) for sl in slices]
        if all(g(u[i]) == images[i] for i in range(n)):
            for sl, img in zip(slices, images):
                if g(img) != F(tuple(g(x) for x in sl)):
                    return CheckResult(False, u)
    return CheckResult(True)


def check_g_o_continuity(F, g, s, n: int | None = None) -> CheckResult:
    """(g,O)-continuity on a finite space.

    Convergent sequences are eventually constant, so the property reduces to:
    F agrees on any two tuples with equal coordinatewise g-images.  The
    witness is such a pair with different F-values.
    """
    _require_finite(s)
    seen = {}
    for u in all_tuples(s, _arity(F, n)):
        key = tuple(g(x) for x in u)
        val = F(u)
        if key in seen and seen[key][1] != val:
            return CheckResult(False, (seen[key][0], u))
        seen.setdefault(key, (u, val))
    return CheckResult(True)


def check_g_increasing(g, s) -> CheckResult:
    _require_finite(s)
    for x, y in s.leq_pairs:
        if not s.leq(g(x), g(y)):
            return CheckResult(False, (x, y))
    return CheckResult(True)


def check_one_one(g, s) -> CheckResult:
    _require_finite(s)
    seen = {}
    for x in s.elements:
        gx = g(x)
        if gx in seen:
            return CheckResult(False, (seen[gx], x))
        seen[gx] = x
    return CheckResult(True)


def image_of_F(F, s, n) -> set:
    return {F(u) for u in all_tuples(s, n)}


def image_of_g(g, s) -> set:
    return {g(x) for x in s.elements}


DECLARED = "declared"
MACHINE_VERIFIED = "machine-verified"
VACUOUS = "vacuous-on-finite"
SAMPLED = "sampled"

ASSUMPTION_FLAGS = (
    "o_complete_subspace",
    "F_o_continuous",
    "g_o_continuous",
    "F_g_o_continuous",
    "star_o_compatible",
    "weakly_star_compatible",
    "commuting",
    "mcb",
    "g_mcb",
    "g_one_one",
    "g_increasing",
    "range_compatible",
    "range_noncompatible",
)


@dataclass(frozen=True)
class Assumption:
    value: bool
    provenance: str
    note: str = ""

    @property
    def verified(self) -> bool:
        return self.provenance in (MACHINE_VERIFIED, VACUOUS)

    def to_dict(self):
        d = {"value": self.value, "provenance": self.provenance}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class AssumptionSet:
    """Hypothesis flags, each tagged with where its truth value came from.

    ``range_compatible`` is the range condition ``F(X^n) in g(X) & E`` and
    ``range_noncompatible`` is ``F(X^n) in E in g(X)``.
    """

    flags: dict[str, Assumption] = field(default_factory=dict)

    def declare(self, name: str, value: bool = True, note: str = ""):
        if name not in ASSUMPTION_FLAGS:
            raise KeyError(f"unknown assumption flag {name!r}")
        self.flags[name] = Assumption(bool(value), DECLARED, note)
        return self

    def record(self, name: str, value: bool, provenance: str, note: str = ""):
        self.flags[name] = Assumption(bool(value), provenance, note)
        return self

    def get(self, name: str) -> Assumption | None:
        return self.flags.get(name)

    def holds(self, name: str) -> bool:
        a = self.flags.get(name)
        return a is not None and a.value

    def verified(self, name: str) -> bool:
        """True only for flags that were checked or are vacuous, and hold."""
        a = self.flags.get(name)
        return a is not None and a.value and a.verified

    def to_dict(self):
        return {k: self.flags[k].to_dict() for k in sorted(self.flags)}


def finite_assumptions(s: FiniteOrderedMetricSpace, F, g, op, E=None,
                       declared: dict | None = None) -> AssumptionSet:
    """Decide every flag of an :class:`AssumptionSet` on a finite space.

    Declared values are ignored where a decision procedure exists; they are
    kept only for flags the procedure does not cover.
    """
    _require_finite(s)
    n = op.n
    E = set(s.elements) if E is None else set(E)
    out = AssumptionSet()
    why = "monotone convergent sequences are eventually constant"
    for name in ("o_complete_subspace", "F_o_continuous", "g_o_continuous", "mcb"):
        out.record(name, True, VACUOUS, why)
    g_inc = check_g_increasing(g, s)
    out.record("g_increasing", g_inc.holds, MACHINE_VERIFIED)
    out.record("g_mcb", g_inc.holds, MACHINE_VERIFIED,
               "on a finite space g-MCB holds iff g is increasing")
    out.record("g_one_one", check_one_one(g, s).holds, MACHINE_VERIFIED)
    out.record("F_g_o_continuous", check_g_o_continuity(F, g, s, n).holds, MACHINE_VERIFIED,
               "F must agree on tuples with equal g-images")
    weak = check_weak_star_compat(F, g, op, s).holds
    out.record("weakly_star_compatible", weak, MACHINE_VERIFIED)
    out.record("star_o_compatible", weak, MACHINE_VERIFIED,
               "equivalent to weak compatibility on a finite space")
    out.record("commuting", check_commuting(F, g, s, n).holds, MACHINE_VERIFIED)
    f_img, g_img = image_of_F(F, s, n), image_of_g(g, s)
    out.record("range_compatible", f_img <= (g_img & E), MACHINE_VERIFIED)
    out.record("range_noncompatible", f_img <= E <= g_img, MACHINE_VERIFIED)
    for name, value in (declared or {}).items():
        if name not in out.flags:
            out.declare(name, value)
    return out
