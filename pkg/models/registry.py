"""
Order kind and determinant method registry.

Classifying n = 2k+1 decides what can be said about weight-k unital
circulant matrices of order n; determinant methods name the two exact
oracles exposed by the det command.
"""

from __future__ import annotations

from enum import Enum
from typing import Dict, List
from dataclasses import dataclass


class OrderKind(str, Enum):
    """
    Shape of the odd order n = 2k+1.

    The kind determines whether a singular weight-k unital circulant
    matrix of order n can exist.
    """
    PRIME_POWER = "prime_power"
    TWO_PRIMES = "two_primes"
    COMPOSITE = "composite"


class DetMethod(str, Enum):
    """Exact determinant oracles."""
    RESULTANT = "resultant"
    ELIMINATION = "elimination"
    BOTH = "both"


@dataclass
class OrderKindMetadata:
    """Metadata describing an order kind."""

    kind: OrderKind
    display_name: str
    singular_possible: bool
    guarantee: str


@dataclass
class DetMethodMetadata:
    """Metadata describing a determinant method."""

    method: DetMethod
    description: str
    bounded: bool  # subject to the elimination oracle bound


ORDER_REGISTRY: Dict[OrderKind, OrderKindMetadata] = {
    OrderKind.PRIME_POWER: OrderKindMetadata(
        kind=OrderKind.PRIME_POWER,
        display_name="Prime power",
        singular_possible=False,
        guarantee="every weight-k unital circulant matrix of order n is nonsingular",
    ),
    OrderKind.TWO_PRIMES: OrderKindMetadata(
        kind=OrderKind.TWO_PRIMES,
        display_name="Product of two primes",
        singular_possible=False,
        guarantee="every weight-k unital circulant matrix of order n is nonsingular",
    ),
    OrderKind.COMPOSITE: OrderKindMetadata(
        kind=OrderKind.COMPOSITE,
        display_name="Composite",
        singular_possible=True,
        guarantee="a singular weight-k unital circulant matrix of order n can be constructed",
    ),
}


DET_REGISTRY: Dict[DetMethod, DetMethodMetadata] = {
    DetMethod.RESULTANT: DetMethodMetadata(
        method=DetMethod.RESULTANT,
        description="Res(x^n - 1, f) by the Euclidean remainder sequence",
        bounded=False,
    ),
    DetMethod.ELIMINATION: DetMethodMetadata(
        method=DetMethod.ELIMINATION,
        description="Bareiss elimination on the n x n matrix",
        bounded=True,
    ),
    DetMethod.BOTH: DetMethodMetadata(
        method=DetMethod.BOTH,
        description="report both values",
        bounded=True,
    ),
}


def get_det_methods() -> List[DetMethod]:
    return list(DET_REGISTRY.keys())


def get_order_metadata(kind: OrderKind) -> OrderKindMetadata:
    """Get metadata for a specific order kind."""
    return ORDER_REGISTRY[kind]


def get_det_metadata(method: DetMethod) -> DetMethodMetadata:
    return DET_REGISTRY[method]


def det_methods_help() -> str:
    """One-line summary of the determinant methods for --help."""
    return "; ".join(f"{m.value}: {meta.description}" for m, meta in DET_REGISTRY.items())
