"""
Census report for n = 45, k = 22 and its brute-force verification.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict

from utils.formatting import format_fraction, format_scientific

from .case_counts import K, N, case1_breakdown, count_case1, count_case2
from .oracles import count_double, enumerate_case1_masks, enumerate_case2_bruteforce, case2_residue_vectors

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CensusReport:
    """
    Inclusion-exclusion census of singular weight-k unital circulants.

    count_phi_n counts f with Phi_n | f, count_phi_sub f with Phi_d | f for
    the other relevant divisor d, count_both the overlap.
    """

    n: int
    k: int
    count_phi_n: int
    count_phi_sub: int
    count_both: int
    breakdown: Dict[int, int] = field(default_factory=dict)
    experimental: bool = False

    @property
    def total(self) -> int:
        return self.count_phi_n + self.count_phi_sub - self.count_both

    @property
    def universe(self) -> int:
        return comb(self.n, self.k)

    @property
    def probability(self) -> Fraction:
        return Fraction(self.total, self.universe)

    def to_dict(self) -> Dict[str, object]:
        """JSON-ready view; counts are decimal strings."""
        return {
            "n": self.n,
            "k": self.k,
            "count_phi_n": str(self.count_phi_n),
            "count_phi_sub": str(self.count_phi_sub),
            "count_both": str(self.count_both),
            "total": str(self.total),
            "universe": str(self.universe),
            "probability": format_fraction(self.probability),
            "probability_decimal": format_scientific(self.probability, 4),
            "experimental": self.experimental,
        }


def census_45() -> CensusReport:
    """Closed-form census at n = 45, k = 22."""
    report = CensusReport(
        n=N,
        k=K,
        count_phi_n=count_case1(),
        count_phi_sub=count_case2(),
        count_both=count_double(),
        breakdown=case1_breakdown(),
    )
    log.info("Census n=%d k=%d: total %d of %d", N, K, report.total, report.universe)
    return report


@dataclass(frozen=True)
class CensusVerification:
    case1_formula: int
    case1_bruteforce: int
    case2_formula: int
    case2_bruteforce: int
    double: int
    residue_vectors: int

    @property
    def agrees(self) -> bool:
        return (
            self.case1_formula == self.case1_bruteforce
            and self.case2_formula == self.case2_bruteforce
            and self.double == 0
        )


def verify_census_45(workers: int = 1) -> CensusVerification:
    """Run both brute-force oracles and compare them with the closed form."""
    masks = enumerate_case1_masks(workers)
    result = CensusVerification(
        case1_formula=count_case1(),
        case1_bruteforce=len(masks),
        case2_formula=count_case2(),
        case2_bruteforce=enumerate_case2_bruteforce(),
        double=count_double(),
        residue_vectors=len(case2_residue_vectors()),
    )
    if not result.agrees:
        log.warning("Census oracles disagree: %s", result)
    return result
