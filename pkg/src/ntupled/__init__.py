"""Multi-tupled coincidence and fixed points in ordered metric spaces.

The package is organised around the reduction of an n-tupled problem for
``F: X^n -> X`` and ``g: X -> X`` to an ordinary coincidence problem for the
lifted pair ``F_*, G`` on ``X^n``:

* :mod:`ntupled.index_algebra` builds and classifies the index operations,
* :mod:`ntupled.spaces` holds finite and real ordered metric spaces,
* :mod:`ntupled.product_lift` lifts maps, metrics and orders to ``X^n``,
* :mod:`ntupled.contractions` provides control functions,
* :mod:`ntupled.solver` checks hypotheses and iterates,
* :mod:`ntupled.oracle` enumerates exact answers on finite spaces.
"""

from .contractions import ControlFunction, linear
from .index_algebra import (
    BinaryOp,
    Partition,
    backward_cyclic,
    build_from_matrix,
    forward_cyclic,
    is_member_U,
    is_permuted,
    odd_even,
    preset,
    skew_1,
    skew_n,
)
from .oracle import certify_theorem, enumerate_star_coincidence, enumerate_star_fixed, lemma_suite
from .product_lift import apply_F_star, apply_G, delta_n, nabla_n, product_leq
from .solver import ProblemInstance, find_initial, iterate, solve
from .spaces import IDENTITY, FiniteOrderedMetricSpace, MappingTable, RealSpace

__version__ = "0.1.0"
