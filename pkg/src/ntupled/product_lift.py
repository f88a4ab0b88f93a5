"""Lifting a pair ``F: X^n -> X``, ``g: X -> X`` to self-maps of ``X^n``.

Tuples are plain Python tuples of carrier elements.  ``slice_(U, op, i)``
picks the coordinates of ``U`` listed in row ``i`` of ``op``; ``F_*`` applies
F to every slice, ``G`` applies g coordinatewise.  A *-coincidence point of
(F, g) is exactly a coincidence point of (F_*, G), which is what lets the
solver run a one-dimensional Picard scheme on ``X^n``.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import DimensionMismatch, IndexOutOfRange, PreconditionUnmet
from .index_algebra import BinaryOp, Partition, is_member_U, is_permuted

__all__ = [
    "slice_",
    "apply_F_star",
    "apply_G",
    "delta_n",
    "nabla_n",
    "product_leq",
    "comparable",
    "orientation",
    "lemma4_check",
    "lemma6_check",
    "Lemma6Report",
]


def slice_(U: tuple, op: BinaryOp, i: int) -> tuple:
    if not 1 <= i <= op.n:
        raise IndexOutOfRange(f"slice index {i} outside 1..{op.n}")
    if len(U) != op.n:
        raise DimensionMismatch(f"tuple of length {len(U)} for n={op.n}")
    return tuple(U[j - 1] for j in op.row(i))


def apply_F_star(F, op: BinaryOp, U: tuple) -> tuple:
    return tuple(F(slice_(U, op, i)) for i in range(1, op.n + 1))


def apply_G(g, U: tuple) -> tuple:
    return tuple(g(x) for x in U)


def _pairs(U, V):
    if len(U) != len(V):
        raise DimensionMismatch(f"tuples of lengths {len(U)} and {len(V)}")
    return zip(U, V)


def delta_n(U: tuple, V: tuple, space):
    """Averaged-sum product metric ``(1/n) sum d(x_i, y_i)``.

    Exact when the space returns fractions.
    """
    ds = [space.dist(x, y) for x, y in _pairs(U, V)]
    return sum(ds) / len(ds)


def nabla_n(U: tuple, V: tuple, space):
    """Max product metric ``max d(x_i, y_i)``."""
    return max(space.dist(x, y) for x, y in _pairs(U, V))


def product_leq(U: tuple, V: tuple, part: Partition, space) -> bool:
    """``U <= V`` in the product order: ``<=`` on A coordinates, ``>=`` on B."""
    for i, (x, y) in enumerate(_pairs(U, V), 1):
        if i in part.A:
            if not space.leq(x, y):
                return False
        elif not space.leq(y, x):
            return False
    return True


def comparable(U: tuple, V: tuple, part: Partition, space) -> bool:
    return product_leq(U, V, part, space) or product_leq(V, U, part, space)


def orientation(U: tuple, V: tuple, part: Partition, space) -> int:
    """+1 if ``U <= V``, -1 if ``U >= V`` (and not equal), 0 if incomparable."""
    if product_leq(U, V, part, space):
        return 1
    if product_leq(V, U, part, space):
        return -1
    return 0


def lemma4_check(g, op: BinaryOp, part: Partition, U: tuple, V: tuple, space) -> list:
    """Slices of ordered G-images stay ordered, flipped on B rows.

    Requires ``op`` in U and ``G(U) <= G(V)`` (either orientation is
    accepted; the reverse one swaps the roles of U and V).  Returns the list
    of rows ``i`` where the conclusion fails, which must be empty.
    """
    if not is_member_U(op, part):
        raise PreconditionUnmet("operation is not in U for this partition")
    GU, GV = apply_G(g, U), apply_G(g, V)
    sign = orientation(GU, GV, part, space)
    if sign == 0:
        raise PreconditionUnmet("G(U) and G(V) are not comparable")
    if sign < 0:
        U, V = V, U
    bad = []
    for i in range(1, op.n + 1):
        lo, hi = apply_G(g, slice_(U, op, i)), apply_G(g, slice_(V, op, i))
        ok = product_leq(lo, hi, part, space) if i in part.A else product_leq(hi, lo, part, space)
        if not ok:
            bad.append(i)
    return bad


class Lemma6Report(NamedTuple):
    permuted: bool
    sum_failures: list  # rows whose average differs from Delta_n(GU, GV)
    max_failures: list  # rows whose max differs from nabla_n(GU, GV)
    bound_failures: list  # rows whose max exceeds nabla_n(GU, GV)

    @property
    def ok(self) -> bool:
        if self.bound_failures:
            return False
        return not self.permuted or not (self.sum_failures or self.max_failures)


def _same(a, b) -> bool:
    if isinstance(a, float) or isinstance(b, float):
        return math.isclose(a, b, rel_tol=1e-12, abs_tol=1e-15)
    return a == b


def lemma6_check(g, op: BinaryOp, U: tuple, V: tuple, space) -> Lemma6Report:
    """Compare per-row averages and maxima of ``d(g x_{i_k}, g y_{i_k})``
    with the product metrics of ``G(U), G(V)``.

    The equalities only have to hold for permuted operations.  For other
    operations the failing rows are still listed, as findings.
    """
    GU, GV = apply_G(g, U), apply_G(g, V)
    total, top = delta_n(GU, GV, space), nabla_n(GU, GV, space)
    sums, maxes, bounds = [], [], []
    for i in range(1, op.n + 1):
        ds = [space.dist(GU[j - 1], GV[j - 1]) for j in op.row(i)]
        if not _same(sum(ds) / op.n, total):
            sums.append(i)
        if not _same(max(ds), top):
            maxes.append(i)
        if max(ds) > top and not _same(max(ds), top):
            bounds.append(i)
    return Lemma6Report(is_permuted(op)[0], sums, maxes, bounds)
