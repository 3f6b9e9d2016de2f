"""Configuration spaces of linear Nakayama algebras, computed exactly.

Dyck paths index the algebras.  From a path we build the index set of
u-variables, the u-equations, an explicit rational parametrization by
F-polynomials, boundary divisor factorizations, monomial maps between
comparable paths and the polytope whose normal fan is the g-vector fan.
"""

from .errors import (
    ChainMismatch,
    DegenerateVertex,
    MalformedPath,
    NakayamaError,
    NotComparable,
    PoleAtPoint,
    RankMismatch,
    TopPathOnly,
    UnknownLabel,
    VerificationFailure,
    ZeroDenominator,
)
from .grid import (
    DyckPath,
    bottom_path,
    enumerate_paths,
    from_heights,
    from_steps,
    ideal_generators,
    leq,
    parse_path,
    top_path,
    upper_covers,
    valleys,
)
from .indexset import Diamond, Down, IndexSet, Label, Up, compatible, index_set, incompatible_set
from .monomap import MonomialMap, compose, monomial_map
from .symbolic import Polynomial, RationalFunction, f_polynomial
from .uspace import (
    divisor_factorization,
    evaluate_point,
    g_vector,
    jacobian_rank,
    parametrization,
    u_system,
    verify_divisor,
    verify_parametrization,
    verify_tropical_duality,
)

__version__ = "0.1.0"
