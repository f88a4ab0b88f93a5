"""Binary operations on the index set ``{1..n}``.

A binary operation ``*`` is stored as its n x n matrix of images, where
``entries[i-1][k-1] = *(i, k)``.  Row ``i`` of the matrix lists the argument
positions that feed the ``i``-th equation of an n-tupled fixed point.  All
public indices are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    BadArity,
    DimensionMismatch,
    DomainViolation,
    OutOfRangeEntry,
    ShapeMismatch,
    UnknownPreset,
)

__all__ = [
    "BinaryOp",
    "Partition",
    "UpsilonTuple",
    "Witness",
    "Membership",
    "build_from_matrix",
    "forward_cyclic",
    "backward_cyclic",
    "skew_1",
    "skew_n",
    "berzig_samet",
    "is_member_U",
    "is_permuted",
    "from_upsilon",
    "to_upsilon",
    "upsilon_compatible",
    "odd_even",
    "prefix_partition",
    "preset",
    "PRESETS",
]


@dataclass(frozen=True)
class BinaryOp:
    n: int
    entries: tuple[tuple[int, ...], ...]

    def __call__(self, i: int, k: int) -> int:
        return self.entries[i - 1][k - 1]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i - 1]

    @property
    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __str__(self):
        width = len(str(self.n))
        return "\n".join(" ".join(f"{v:>{width}}" for v in r) for r in self.entries)


@dataclass(frozen=True)
class Partition:
    """Ordered pair ``{A, B}`` splitting ``{1..n}``.

    ``A`` collects the arguments in which F is increasing, ``B`` those in
    which it is decreasing.
    """

    n: int
    A: frozenset[int]
    B: frozenset[int]

    def __init__(self, n: int, A: Iterable[int], B: Iterable[int]):
        A, B = frozenset(A), frozenset(B)
        if not A or not B:
            raise DomainViolation("both blocks of a partition must be nonempty")
        if A & B:
            raise DomainViolation(f"blocks overlap in {sorted(A & B)}")
        if A | B != frozenset(range(1, n + 1)):
            raise DomainViolation(f"blocks do not cover 1..{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    def side(self, i: int) -> str:
        return "A" if i in self.A else "B"

    def __str__(self):
        return f"{{{sorted(self.A)}, {sorted(self.B)}}}"


@dataclass(frozen=True)
class UpsilonTuple:
    """The n self-maps ``sigma_1..sigma_n`` of ``{1..n}``, each as an n-tuple."""

    n: int
    sigmas: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.sigmas) != self.n or any(len(s) != self.n for s in self.sigmas):
            raise ShapeMismatch(f"need {self.n} maps, each of length {self.n}")
        for i, s in enumerate(self.sigmas, 1):
            for k, v in enumerate(s, 1):
                if not 1 <= v <= self.n:
                    raise OutOfRangeEntry(i, k, v, self.n)


class Witness(NamedTuple):
    pair: tuple[int, int]
    value: int
    condition: str  # one of "a", "b", "c", "d"


class Membership(NamedTuple):
    member: bool
    witnesses: list[Witness]

    def __bool__(self):
        return self.member


def build_from_matrix(n: int, rows: Sequence[Sequence[int]]) -> BinaryOp:
    if n < 2:
        raise BadArity(f"n must be at least 2, got {n}")
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ShapeMismatch(f"expected a {n}x{n} grid")
    for i, r in enumerate(rows, 1):
        for k, v in enumerate(r, 1):
            if isinstance(v, bool) or not isinstance(v, int) or not 1 <= v <= n:
                raise OutOfRangeEntry(i, k, v, n)
    return BinaryOp(n, tuple(tuple(r) for r in rows))


def _from_formula(n, formula):
    if n < 2:
        raise BadArity(f"n must be at least 2, got {n}")
    return build_from_matrix(
        n, [[formula(i, k) for k in range(1, n + 1)] for i in range(1, n + 1)]
    )


def forward_cyclic(n: int) -> BinaryOp:
    """Row ``i`` reads ``i, i+1, ..., n, 1, ..., i-1``."""
    return _from_formula(n, lambda i, k: i + k - 1 if k <= n - i + 1 else i + k - n - 1)


def backward_cyclic(n: int) -> BinaryOp:
    """Row ``i`` reads ``i, i-1, ..., 1, n, ..., i+1``."""
    return _from_formula(n, lambda i, k: i - k + 1 if k <= i else n + i - k + 1)


def skew_1(n: int) -> BinaryOp:
    """Row ``i`` reflects at position 1: ``i, ..., 2, 1, 2, ..., n-i+1``."""
    return _from_formula(n, lambda i, k: i - k + 1 if k <= i else k - i + 1)


def skew_n(n: int) -> BinaryOp:
    """Row ``i`` reflects at position n: ``i, ..., n-1, n, n-1, ..., n-i+1``."""
    return _from_formula(n, lambda i, k: i + k - 1 if k <= n - i + 1 else 2 * n - i - k + 1)


def berzig_samet(n: int, p: int, phis, psis) -> BinaryOp:
    """Assemble ``*`` from 2n index maps.

    ``phis[i-1]`` lists the images of columns ``1..p`` for row ``i`` and
    ``psis[i-1]`` the images of columns ``p+1..n``.  Rows ``1..p`` must keep
    each block inside itself, rows ``p+1..n`` must swap the blocks.
    """
    if not 1 <= p < n:
        raise DomainViolation(f"need 1 <= p < n, got p={p}, n={n}")
    if len(phis) != n or len(psis) != n:
        raise ShapeMismatch(f"need {n} phi maps and {n} psi maps")
    low, high = set(range(1, p + 1)), set(range(p + 1, n + 1))
    rows = []
    for i in range(1, n + 1):
        phi, psi = list(phis[i - 1]), list(psis[i - 1])
        if len(phi) != p or len(psi) != n - p:
            raise ShapeMismatch(f"row {i}: phi needs {p} values and psi {n - p}")
        phi_range, psi_range = (low, high) if i <= p else (high, low)
        for k, v in enumerate(phi, 1):
            if v not in phi_range:
                raise DomainViolation(f"phi_{i}({k}) = {v} not in {sorted(phi_range)}")
        for k, v in enumerate(psi, p + 1):
            if v not in psi_range:
                raise DomainViolation(f"psi_{i}({k}) = {v} not in {sorted(psi_range)}")
        rows.append(phi + psi)
    return build_from_matrix(n, rows)


def _check_dims(op_n, part_n):
    if op_n != part_n:
        raise DimensionMismatch(f"operation has n={op_n}, partition has n={part_n}")


def is_member_U(op: BinaryOp, part: Partition) -> Membership:
    """Test the four block-closure conditions and collect every violation.

    (a) A x A -> A, (b) A x B -> B, (c) B x A -> B, (d) B x B -> A.
    """
    _check_dims(op.n, part.n)
    witnesses = []
    for i in range(1, op.n + 1):
        for k in range(1, op.n + 1):
            i_in_a, k_in_a = i in part.A, k in part.A
            cond = {(True, True): "a", (True, False): "b",
                    (False, True): "c", (False, False): "d"}[(i_in_a, k_in_a)]
            target = part.A if i_in_a == k_in_a else part.B
            v = op(i, k)
            if v not in target:
                witnesses.append(Witness((i, k), v, cond))
    return Membership(not witnesses, witnesses)


def is_permuted(op: BinaryOp) -> tuple[bool, int | None]:
    """Return ``(True, None)`` or ``(False, first_bad_row)``."""
    full = set(range(1, op.n + 1))
    for i, r in enumerate(op.entries, 1):
        if set(r) != full:
            return False, i
    return True, None


def from_upsilon(u: UpsilonTuple) -> BinaryOp:
    return build_from_matrix(u.n, [list(s) for s in u.sigmas])


def to_upsilon(op: BinaryOp) -> UpsilonTuple:
    return UpsilonTuple(op.n, tuple(tuple(r) for r in op.entries))


def upsilon_compatible(u: UpsilonTuple, part: Partition) -> bool:
    _check_dims(u.n, part.n)
    A, B = part.A, part.B
    for i, s in enumerate(u.sigmas, 1):
        image_a = {s[k - 1] for k in A}
        image_b = {s[k - 1] for k in B}
        if i in A:
            ok = image_a <= A and image_b <= B
        else:
            ok = image_a <= B and image_b <= A
        if not ok:
            return False
    return True


def odd_even(n: int) -> Partition:
    return Partition(n, range(1, n + 1, 2), range(2, n + 1, 2))


def prefix_partition(n: int, p: int) -> Partition:
    return Partition(n, range(1, p + 1), range(p + 1, n + 1))


BERZIG_SAMET_3 = ((1, 2, 3), (2, 1, 3), (3, 3, 2))
BERZIG_SAMET_4 = ((1, 2, 3, 4), (1, 2, 4, 3), (3, 4, 2, 1), (3, 4, 1, 2))


def _fixed(n_expected, build):
    def make(n=None, **_):
        if n is not None and n != n_expected:
            raise BadArity(f"this preset is defined only for n={n_expected}, got {n}")
        return build()
    return make


def _general(build, default_partition=odd_even):
    def make(n=None, **_):
        if n is None:
            raise BadArity("this preset needs an explicit n")
        return build(n), default_partition(n)
    return make


def _berzig_samet_general(n=None, p=None, phis=None, psis=None, **_):
    if n is None or p is None or phis is None or psis is None:
        raise BadArity("berzig-samet-general needs n, p, phis and psis")
    return berzig_samet(n, p, phis, psis), prefix_partition(n, p)


def _upsilon(n=None, sigmas=None, A=None, B=None, **_):
    if sigmas is None or A is None or B is None:
        raise BadArity("upsilon preset needs sigmas, A and B")
    n = len(sigmas) if n is None else n
    u = UpsilonTuple(n, tuple(tuple(s) for s in sigmas))
    return from_upsilon(u), Partition(n, A, B)


PRESETS = {
    "coupled": _fixed(2, lambda: (build_from_matrix(2, [[1, 2], [2, 1]]), Partition(2, [1], [2]))),
    "berinde-borcut": _fixed(3, lambda: (skew_1(3), Partition(3, [1, 3], [2]))),
    "wu-liu-3": _fixed(3, lambda: (skew_n(3), Partition(3, [1, 3], [2]))),
    "berzig-samet-3": _fixed(3, lambda: (build_from_matrix(3, BERZIG_SAMET_3), prefix_partition(3, 2))),
    "karapinar-luong": _fixed(4, lambda: (forward_cyclic(4), odd_even(4))),
    "wu-liu-4": _fixed(4, lambda: (backward_cyclic(4), odd_even(4))),
    "berzig-samet-4": _fixed(4, lambda: (build_from_matrix(4, BERZIG_SAMET_4), prefix_partition(4, 2))),
    "forward-cyclic": _general(forward_cyclic),
    "backward-cyclic": _general(backward_cyclic),
    "skew-1": _general(skew_1),
    "skew-n": _general(skew_n),
    "berzig-samet-general": _berzig_samet_general,
    "upsilon": _upsilon,
}


def preset(name: str, n: int | None = None, **params) -> tuple[BinaryOp, Partition]:
    """Look up a named (operation, partition) configuration.

    Cyclic presets are built for any ``n``, including odd ``n`` where the
    operation falls outside ``U``; validity is queried separately with
    :func:`is_member_U`.
    """
    try:
        make = PRESETS[name]
    except KeyError:
        raise UnknownPreset(name) from None
    return make(n=n, **params)
