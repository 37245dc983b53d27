"""Cyclotomic and fundamental recurrent polynomials, divisor machinery."""

from .arith import FactoredOrder, divisors, factorize, totient, weight_splits
from .cyclotomic import (
    CyclotomicCache,
    cyclotomic,
    fundamental_recurrent,
    cyclotomic_residue,
    divides_cyclotomic,
    cyclotomic_divisors_of,
)

__all__ = [
    "FactoredOrder",
    "divisors",
    "factorize",
    "totient",
    "weight_splits",
    "CyclotomicCache",
    "cyclotomic",
    "fundamental_recurrent",
    "cyclotomic_residue",
    "divides_cyclotomic",
    "cyclotomic_divisors_of",
]
