"""Recurrent decompositions, p-uniformization and the n = 105 counterexample."""

from .decomposition import (
    Decomposition,
    CoefficientGrouping,
    decompose_rational,
    groupings,
    phi_certificate,
    two_prime_shape,
)
from .uniformize import ambiguity_delta, decompose_bounded, is_p_uniformized, uniformize_p
from .counterexample import (
    Contradiction,
    CounterexampleEvidence,
    counterexample_polynomial,
    verify_no_unital_decomposition_105,
)

__all__ = [
    "Decomposition",
    "CoefficientGrouping",
    "decompose_rational",
    "groupings",
    "phi_certificate",
    "two_prime_shape",
    "uniformize_p",
    "is_p_uniformized",
    "decompose_bounded",
    "ambiguity_delta",
    "Contradiction",
    "CounterexampleEvidence",
    "counterexample_polynomial",
    "verify_no_unital_decomposition_105",
]
