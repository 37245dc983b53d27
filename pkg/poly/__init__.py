"""Exact dense polynomial arithmetic over Z and Q."""

from .dense import NEG_INFINITY, IntPoly, RatPoly
from .ops import (
    add,
    mul,
    divrem,
    exact_div,
    rem_monic,
    xgcd,
    xgcd_multi,
    reduce_mod_xn_minus_1,
    weight,
    is_bounded,
    is_unital,
    resultant,
)

__all__ = [
    "NEG_INFINITY",
    "IntPoly",
    "RatPoly",
    "add",
    "mul",
    "divrem",
    "exact_div",
    "rem_monic",
    "xgcd",
    "xgcd_multi",
    "reduce_mod_xn_minus_1",
    "weight",
    "is_bounded",
    "is_unital",
    "resultant",
]
