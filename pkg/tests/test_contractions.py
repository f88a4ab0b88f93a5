from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ntupled.contractions import (
    check_below_identity,
    check_increasing,
    default_grid,
    from_builtin,
    implied_classes,
    linear,
    piecewise_linear,
    quadratic_drop,
    rational,
)
from ntupled.errors import AlphaOutOfRange


class TestLinear:
    def test_exact(self):
        phi = linear("1/2")
        assert phi(Fraction(3)) == Fraction(3, 2)
        assert phi.declared_class == "Linear"

    @pytest.mark.parametrize("alpha", [1, 1.5, -0.1])
    def test_range(self, alpha):
        with pytest.raises(AlphaOutOfRange):
            linear(alpha)


class TestBuiltins:
    def test_values(self):
        assert rational()(1.0) == 0.5
        assert quadratic_drop()(1.0) == 0.5
        assert quadratic_drop()(3.0) == 0.0
        assert from_builtin("t/(1+t)").name == "t/(1+t)"
        with pytest.raises(KeyError):
            from_builtin("nope")

    def test_piecewise(self):
        phi = piecewise_linear([1], ["1/4", "1/2"])
        assert phi(Fraction(1, 2)) == Fraction(1, 8)
        assert phi(Fraction(2)) == 1
        with pytest.raises(ValueError):
            piecewise_linear([1, 2], [0.5])


class TestSamplingChecks:
    def test_below_identity(self):
        grid = default_grid()
        assert check_below_identity(rational(), grid) == []
        assert check_below_identity(from_builtin("t-t^2/2"), grid) == []
        with pytest.raises(ValueError):
            check_below_identity(rational(), [0.0])

    def test_increasing(self):
        assert check_increasing(rational(), default_grid()) == []
        # t - t^2/2 turns down after t = 1
        assert check_increasing(quadratic_drop(), default_grid())

    def test_grid_positive(self):
        g = default_grid(1e-2, 1e2, 10)
        assert len(g) == 10 and g[0] == pytest.approx(1e-2) and g[-1] == pytest.approx(1e2)
        with pytest.raises(ValueError):
            default_grid(0, 1)


class TestLattice:
    def test_closure(self):
        assert implied_classes("Im") == {"Im", "Theta", "Psi", "Phi", "Omega"}
        assert implied_classes("Psi") == {"Psi", "Omega"}
        assert "Omega" in implied_classes("Linear")
        with pytest.raises(ValueError):
            implied_classes("Zeta")


@settings(max_examples=200, deadline=None)
@given(st.fractions(0, Fraction(99, 100)), st.fractions(Fraction(1, 1000), 1000))
def test_linear_below_identity(alpha, t):
    assert linear(alpha)(t) < t


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(["Linear", "Im", "Theta", "Psi", "Phi", "Omega"]))
def test_lattice_is_upward_closed(cls):
    up = implied_classes(cls)
    assert "Omega" in up
    for c in up:
        assert implied_classes(c) <= up
