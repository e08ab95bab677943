"""Exact arithmetic: rational polynomials, algebraic numbers, certified logs."""

from .polyq import PolyQ, cyclotomic, discriminant, gcd_poly, resultant
from .intervals import RatInterval, atan2_interval, log_interval, pi_interval
from .modp import FactorizationModP, factor_mod_p
from .factorq import factor_over_q, is_irreducible_over_q
from .algebraic import (
    AlgebraicNumber,
    algebraic_product,
    algebraic_sum,
    certified_log,
    equals_one,
    is_root_of_unity,
    matrix_charpoly,
    roots_of,
)

__all__ = [
    "PolyQ",
    "cyclotomic",
    "discriminant",
    "gcd_poly",
    "resultant",
    "RatInterval",
    "atan2_interval",
    "log_interval",
    "pi_interval",
    "FactorizationModP",
    "factor_mod_p",
    "factor_over_q",
    "is_irreducible_over_q",
    "AlgebraicNumber",
    "algebraic_product",
    "algebraic_sum",
    "certified_log",
    "equals_one",
    "is_root_of_unity",
    "matrix_charpoly",
    "roots_of",
]
