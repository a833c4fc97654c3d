"""Exact arithmetic kernel: fields, polynomials, Groebner elimination,
Sturm counting, finite-field factorization, Wronskians."""

from .domains import (
    QQ,
    QQi,
    CharacteristicError,
    GaussRat,
    GaussianRationals,
    PrimeField,
    Rationals,
    is_probable_prime,
    random_prime,
)
from .gfpoly import cycle_type_of, factor_mod_p, squarefree_decomposition
from .groebner import (
    DimensionError,
    ReconstructionError,
    eliminate_modp,
    eliminate_rational_direct,
    eliminate_rational_modular,
    groebner_basis,
    groebner_eliminate,
    quotient_dimension,
    rational_reconstruct,
)
from .multipoly import MultiPoly, PolySystem, determinant, realize_gaussian, times_i
from .unipoly import (
    SquarefreeViolationError,
    UniPoly,
    squarefree_and_degree,
    sturm_count,
    sturm_count_interval,
    wronskian,
)

__all__ = [
    "QQ",
    "QQi",
    "CharacteristicError",
    "DimensionError",
    "GaussRat",
    "GaussianRationals",
    "MultiPoly",
    "PolySystem",
    "PrimeField",
    "Rationals",
    "ReconstructionError",
    "SquarefreeViolationError",
    "UniPoly",
    "cycle_type_of",
    "determinant",
    "eliminate_modp",
    "eliminate_rational_direct",
    "eliminate_rational_modular",
    "factor_mod_p",
    "groebner_basis",
    "quotient_dimension",
    "groebner_eliminate",
    "is_probable_prime",
    "random_prime",
    "rational_reconstruct",
    "realize_gaussian",
    "squarefree_and_degree",
    "squarefree_decomposition",
    "sturm_count",
    "sturm_count_interval",
    "times_i",
    "wronskian",
]
