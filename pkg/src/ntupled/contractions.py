"""Control functions for Boyd-Wong type contractions.

Only the pointwise clause ``phi(t) < t`` (and, where needed, monotonicity)
can be sampled.  Semicontinuity and limit clauses are analytic; the class a
function belongs to is therefore *declared* and propagated through the
inclusion lattice by :func:`implied_classes`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import AlphaOutOfRange
from .spaces import to_exact

__all__ = [
    "CLASSES",
    "ControlFunction",
    "linear",
    "rational",
    "quadratic_drop",
    "piecewise_linear",
    "BUILTINS",
    "from_builtin",
    "check_below_identity",
    "check_increasing",
    "default_grid",
    "implied_classes",
]

CLASSES = ("Im", "Theta", "Psi", "Phi", "Omega")

# direct supersets of each family
_PARENTS = {
    "Im": ("Theta",),
    "Theta": ("Psi", "Phi"),
    "Psi": ("Omega",),
    "Phi": ("Omega",),
    "Omega": (),
    "Linear": ("Im",),
}


@dataclass(frozen=True)
class ControlFunction:
    evaluator: Callable
    declared_class: str
    name: str = "phi"
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.declared_class not in _PARENTS:
            raise ValueError(f"unknown control class {self.declared_class!r}")

    def __call__(self, t):
        return self.evaluator(t)

    def to_dict(self):
        out = {"name": self.name, "class": self.declared_class}
        out.update({k: str(v) for k, v in self.params.items()})
        return out


def _exact_or_float(alpha):
    return alpha if isinstance(alpha, (Fraction, float)) else to_exact(alpha)


def linear(alpha) -> ControlFunction:
    """``t -> alpha * t`` for ``alpha`` in ``[0, 1)``."""
    a = _exact_or_float(alpha)
    if not 0 <= a < 1:
        raise AlphaOutOfRange(f"alpha must lie in [0, 1), got {alpha}")
    return ControlFunction(lambda t: a * t, "Linear", "linear", {"alpha": a})


def rational() -> ControlFunction:
    """``t -> t / (1 + t)``; continuous, so a member of every family."""
    return ControlFunction(lambda t: t / (1 + t), "Im", "t/(1+t)")


def quadratic_drop() -> ControlFunction:
    """``t -> max(t - t^2/2, 0)``."""
    def phi(t):
        v = t - t * t / 2
        return v if v > 0 else v * 0
    return ControlFunction(phi, "Im", "t-t^2/2")


def piecewise_linear(breaks: Sequence, alphas: Sequence) -> ControlFunction:
    """``t -> alpha_j * t`` on ``[breaks[j-1], breaks[j])``.

    ``alphas`` has one more entry than ``breaks``.  Each piece is closed on
    the left, so the function is right continuous (declared ``Theta``).
    """
    if len(alphas) != len(breaks) + 1:
        raise ValueError("need len(alphas) == len(breaks) + 1")
    alphas = [_exact_or_float(a) for a in alphas]
    breaks = [_exact_or_float(b) for b in breaks]
    for a in alphas:
        if not 0 <= a < 1:
            raise AlphaOutOfRange(f"alpha must lie in [0, 1), got {a}")
    if list(breaks) != sorted(breaks):
        raise ValueError("breaks must be increasing")

    def phi(t):
        j = sum(1 for b in breaks if t >= b)
        return alphas[j] * t

    return ControlFunction(phi, "Theta", "piecewise-linear",
                           {"breaks": list(breaks), "alphas": list(alphas)})


BUILTINS = {
    "t/(1+t)": rational,
    "t-t^2/2": quadratic_drop,
    "piecewise-linear": piecewise_linear,
}


def from_builtin(name: str, **params) -> ControlFunction:
    try:
        make = BUILTINS[name]
    except KeyError:
        raise KeyError(f"unknown control function {name!r}; known: {sorted(BUILTINS)}") from None
    return make(**params)


def default_grid(lo=1e-3, hi=1e3, num: int = 64) -> list[float]:
    """Logarithmically spaced positive sample points."""
    lo, hi = float(lo), float(hi)
    if lo <= 0:
        raise ValueError("grid must stay strictly positive")
    if hi <= lo:
        hi = lo * 10
    return [float(t) for t in np.logspace(np.log10(lo), np.log10(hi), num)]


def check_below_identity(phi: ControlFunction, grid: Iterable) -> list:
    """Sample points where ``phi(t) < t`` fails."""
    out = []
    for t in grid:
        if t <= 0:
            raise ValueError(f"grid point {t} is not positive")
        if not phi(t) < t:
            out.append(t)
    return out


def check_increasing(phi: ControlFunction, grid: Iterable) -> list:
    """Adjacent sample pairs ``(s, t)``, ``s < t``, where ``phi(s) > phi(t)``.

    Adjacent pairs suffice: non-decreasing on neighbours is non-decreasing
    on every pair of the grid.
    """
    pts = sorted(set(grid))
    return [(s, t) for s, t in zip(pts, pts[1:]) if phi(s) > phi(t)]


def implied_classes(declared: str) -> set[str]:
    """Upward closure of a declared family in the inclusion lattice."""
    if declared not in _PARENTS:
        raise ValueError(f"unknown control class {declared!r}")
    out, todo = set(), [declared]
    while todo:
        c = todo.pop()
        if c not in out:
            out.add(c)
            todo.extend(_PARENTS[c])
    return out
