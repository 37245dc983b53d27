"""
Evidence that a unital polynomial divisible by Phi_105 need not have a
unital recurrent decomposition once n has three distinct primes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from cyclo import CyclotomicCache, cyclotomic_residue, divides_cyclotomic, fundamental_recurrent, weight_splits
from poly import IntPoly

from .decomposition import Decomposition, decompose_rational

N = 105
EXPONENTS = (5, 6, 10, 25, 27, 35, 40, 48, 50, 65, 69, 70, 80, 85, 95, 100)
# recurrence orders n/p for p = 7, 5, 3
RECURRENCES = (15, 21, 35)

EXPECTED_RESIDUES: Dict[int, IntPoly] = {
    15: IntPoly.constant(-7),
    21: IntPoly.monomial(6, 5),
    35: IntPoly.monomial(20, -3),
}
EXPECTED_SOLUTIONS = ((0, 2, 2), (1, 0, 3))


def counterexample_polynomial() -> IntPoly:
    return IntPoly.from_exponents(EXPONENTS)


def identity_combination() -> IntPoly:
    """(1+x^5+x^10+x^15+x^25+x^30) G(105,35) + x^6 G(105,21) - G(105,15)."""
    return (
        IntPoly.from_exponents((0, 5, 10, 15, 25, 30)) * fundamental_recurrent(N, 35)
        + IntPoly.monomial(6) * fundamental_recurrent(N, 21)
        - fundamental_recurrent(N, 15)
    )


@dataclass(frozen=True)
class Contradiction:
    """A weight split with h_r = 0 for `vanishing`, refuted at the Phi_r roots."""

    solution: Tuple[int, ...]
    vanishing: int
    others_vanish: bool
    f_residue: IntPoly

    @property
    def holds(self) -> bool:
        return self.others_vanish and not self.f_residue.is_zero


@dataclass(frozen=True)
class CounterexampleEvidence:
    f: IntPoly
    weight: int
    unital: bool
    identity_holds: bool
    phi_n_divides: bool
    residues: Dict[int, IntPoly]
    g_residues: Dict[Tuple[int, int], IntPoly]
    solutions: Tuple[Tuple[int, ...], ...]
    contradictions: Tuple[Contradiction, ...]
    rational_decomposition: Decomposition

    @property
    def all_checks_pass(self) -> bool:
        return (
            self.weight == 16
            and self.unital
            and self.identity_holds
            and self.phi_n_divides
            and self.residues == EXPECTED_RESIDUES
            and self.solutions == EXPECTED_SOLUTIONS
            and len(self.contradictions) == len(self.solutions)
            and all(c.holds for c in self.contradictions)
            and self.rational_decomposition.verify(self.f)
        )


def verify_no_unital_decomposition_105(cache: Optional[CyclotomicCache] = None) -> CounterexampleEvidence:
    """
    Collect every check of the n = 105 counterexample.

    Solutions are (h_15(1), h_21(1), h_35(1)) with
    16 = 7 h_15(1) + 5 h_21(1) + 3 h_35(1). Each has a zero entry; since the
    multipliers would be unital that multiplier is 0, and Phi_r for that r
    then divides the remaining terms but not f.
    """
    if cache is None:
        cache = CyclotomicCache()
    f = counterexample_polynomial()

    residues = {r: cyclotomic_residue(f, r, cache) for r in RECURRENCES}
    g_residues = {
        (r, d): cyclotomic_residue(fundamental_recurrent(N, r), d, cache)
        for r in RECURRENCES
        for d in RECURRENCES
    }
    weights = [N // r for r in RECURRENCES]
    solutions = tuple(weight_splits(f.weight(), weights))

    contradictions = []
    for sol in solutions:
        for r, value in zip(RECURRENCES, sol):
            if value != 0:
                continue
            others_vanish = all(g_residues[(other, r)].is_zero for other in RECURRENCES if other != r)
            contradictions.append(
                Contradiction(solution=sol, vanishing=r, others_vanish=others_vanish, f_residue=residues[r])
            )
            break

    return CounterexampleEvidence(
        f=f,
        weight=f.weight(),
        unital=f.is_unital(),
        identity_holds=identity_combination() == f,
        phi_n_divides=divides_cyclotomic(f, N, cache),
        residues=residues,
        g_residues=g_residues,
        solutions=solutions,
        contradictions=tuple(contradictions),
        rational_decomposition=decompose_rational(f, N, cache),
    )
