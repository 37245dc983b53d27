"""Order classification and explicit singular constructions."""

from .order_class import OrderClass, classify
from .builder import (
    Construction,
    construct_singular,
    eligible_exponents,
    feasibility_margin,
    solve_ab,
)
from .verify import NonsingularityCheck, verify_guaranteed_nonsingular

__all__ = [
    "OrderClass",
    "classify",
    "Construction",
    "construct_singular",
    "eligible_exponents",
    "feasibility_margin",
    "solve_ab",
    "NonsingularityCheck",
    "verify_guaranteed_nonsingular",
]
