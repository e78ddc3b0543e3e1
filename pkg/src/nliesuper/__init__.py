"""Exact structure theory and Schur multipliers for finite-dimensional n-Lie superalgebras."""
from .algebra import (
    AlgebraError,
    NLieSuperalgebra,
    bracket,
    direct_sum,
    make_abelian,
    make_filiform,
    make_heisenberg_nlie,
    validate_grading,
    validate_jacobi,
)
from .basis import GradedDimension, enumerate_monomials, normalize_tuple
from .invariants import (
    center,
    derived_subalgebra,
    is_filiform,
    lower_central_series,
    minimal_generators,
    nilpotency_class,
    quotient,
)
from .multiplier import CapacityError, MultiplierReport, multiplier_dim, multiplier_of_quotient
from .serialize import AlgebraFormatError, dumps, load, loads, save

__all__ = [
    "AlgebraError", "AlgebraFormatError", "CapacityError", "GradedDimension",
    "MultiplierReport", "NLieSuperalgebra", "bracket", "center", "derived_subalgebra",
    "direct_sum", "dumps", "enumerate_monomials", "is_filiform", "load", "loads",
    "lower_central_series", "make_abelian", "make_filiform", "make_heisenberg_nlie",
    "minimal_generators", "multiplier_dim", "multiplier_of_quotient", "nilpotency_class",
    "normalize_tuple", "quotient", "save", "validate_grading", "validate_jacobi",
]
__version__ = "0.1.0"
