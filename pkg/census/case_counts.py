"""
Closed-form counts for the n = 45, k = 22 census.

Case 1 counts unital f with Phi_45 | f, Case 2 unital f with Phi_15 | f.
Both go through the unique 3-uniformized (3,5)-recurrent decomposition;
the counts below only use combinatorics on the (b, c) parameters, never an
enumeration of polynomials.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import comb, factorial
from typing import Dict, List, Tuple

from cyclo import weight_splits

N, K = 45, 22
P, Q = 3, 5


def _comb(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def _hitting_subsets(groups: int, size: int, ones: int) -> int:
    """Subsets of `ones` cells among groups*size cells meeting every group."""
    return sum(
        (-1) ** i * comb(groups, i) * _comb((groups - i) * size, ones)
        for i in range(groups + 1)
    )


def _subsets_without_full_group(groups: int, size: int, ones: int) -> int:
    """Subsets of `ones` cells among groups*size cells filling no group completely."""
    return sum(
        (-1) ** i * comb(groups, i) * _comb((groups - i) * size, ones - i * size)
        for i in range(groups + 1)
    )


def unital_breakdown(p: int, q: int, m: int, sum_b: int, sum_c: int) -> Dict[int, int]:
    """
    Unital uniformized pairs (b, c) for order p*q*m, keyed by the number t
    of residue classes s whose C_s carries a 1.

    A class with a 1 in C_s must have B_s = {0}; the b ones go to the
    other m - t classes and may not fill a whole B_s.
    """
    out: Dict[int, int] = {}
    for t in range(m + 1):
        ways = (
            comb(m, t)
            * _hitting_subsets(t, p, sum_c)
            * _subsets_without_full_group(m - t, q, sum_b)
        )
        if ways:
            out[t] = ways
    return out


def case1_breakdown() -> Dict[int, int]:
    """
    Example:
        >>> case1_breakdown()
        {1: 1890, 2: 135}
    """
    m = N // (P * Q)
    total: Counter = Counter()
    for sum_b, sum_c in weight_splits(K, [P, Q]):
        total.update(unital_breakdown(P, Q, m, sum_b, sum_c))
    return dict(sorted(total.items()))


def count_case1() -> int:
    return sum(case1_breakdown().values())


@dataclass(frozen=True)
class Case2Profile:
    """A (b, c) pattern up to permutation with its contribution."""

    b: Tuple[int, ...]
    c: Tuple[int, ...]
    permutations: int
    multiplier: int

    @property
    def free_residues(self) -> int:
        """Residues d_j in {1, 2}; multiplier = 3 ** free_residues."""
        return sum(1 for bi in self.b for ci in self.c if 0 < bi + ci < 3)

    @property
    def contribution(self) -> int:
        return self.permutations * self.multiplier


def _arrangements(pattern: Tuple[int, ...]) -> int:
    out = factorial(len(pattern))
    for count in Counter(pattern).values():
        out //= factorial(count)
    return out


def _sorted_patterns(length: int, bound: int, total: int) -> List[Tuple[int, ...]]:
    return sorted(
        {tuple(sorted(v)) for v in product(range(bound + 1), repeat=length) if sum(v) == total}
    )


def case2_profiles() -> List[Case2Profile]:
    """
    Patterns for residues modulo x^15 - 1.

    With d = 15 the only residue class is s = 0, so every pair (b_u, c_v)
    meets in some d_j by the Chinese remainder theorem; each d_j has
    C(3, d_j) unital lifts.
    """
    d = P * Q
    bound = N // d
    profiles = []
    for sum_b, sum_c in weight_splits(K, [P, Q]):
        for b in _sorted_patterns(Q, bound, sum_b):
            if min(b) != 0:
                continue
            for c in _sorted_patterns(P, bound, sum_c):
                if max(b) + max(c) > bound:
                    continue
                multiplier = 1
                for bi in b:
                    for ci in c:
                        multiplier *= comb(bound, bi + ci)
                profiles.append(
                    Case2Profile(
                        b=b,
                        c=c,
                        permutations=_arrangements(b) * _arrangements(c),
                        multiplier=multiplier,
                    )
                )
    return profiles


def count_case2() -> int:
    return sum(profile.contribution for profile in case2_profiles())


def double_count_obstruction() -> List[Tuple[int, ...]]:
    """
    Nonnegative (h_5(1), h_3(1)) with 4 = 3 h_5(1) + 5 h_3(1).

    A polynomial in both cases would need h_15 = h_5(x) G(15, 5) with
    h_15(1) = 4, which has no solution.
    """
    return weight_splits(4, [P, Q])
