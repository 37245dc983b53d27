"""
Brute-force oracles for the n = 45, k = 22 census.

Neither oracle uses the closed-form profile algebra: Case 1 scans unital
multiplier pairs as bitmasks, Case 2 scans raw (b, c) parameter vectors and
checks divisibility of each reconstructed residue directly.
"""

from __future__ import annotations

import logging
from itertools import product
from math import comb
from multiprocessing import Pool
from typing import FrozenSet, List, Optional, Sequence, Set, Tuple

from cyclo import CyclotomicCache, divides_cyclotomic
from poly import IntPoly

from .case_counts import K, N, P, Q
from .family import UniformizedMember, uniformized_family

log = logging.getLogger(__name__)

H15_BITS = N // P   # h_15 multiplies G(45, 15)
H9_BITS = N // Q    # h_9 multiplies G(45, 9)


def popcount(x: int) -> int:
    return bin(x).count("1")


def spread(mask: int, width: int, n: int = N) -> int:
    """Bitmask of h(x) * G(n, width) for h given as a `width`-bit mask."""
    out = 0
    for shift in range(0, n, width):
        out |= mask << shift
    return out


def mask_to_poly(mask: int) -> IntPoly:
    return IntPoly.from_exponents(i for i in range(mask.bit_length()) if mask >> i & 1)


def _case1_block(bounds: Tuple[int, int]) -> Set[int]:
    lo, hi = bounds
    by_weight: dict = {}
    for b in range(1 << H9_BITS):
        by_weight.setdefault(popcount(b), []).append(spread(b, H9_BITS))

    found: Set[int] = set()
    for a in range(lo, hi):
        rest = K - (N // H15_BITS) * popcount(a)
        if rest < 0 or rest % (N // H9_BITS):
            continue
        fa = spread(a, H15_BITS)
        for fb in by_weight.get(rest // (N // H9_BITS), ()):
            if fa & fb == 0:
                found.add(fa | fb)
    return found


def _ranges(total: int, parts: int) -> List[Tuple[int, int]]:
    step = -(-total // parts)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def enumerate_case1_masks(workers: int = 1) -> FrozenSet[int]:
    """
    Distinct unital f = h_15 G(45,15) + h_9 G(45,9) with f(1) = 22, as bitmasks.

    The outer loop over the 2^15 masks of h_15 is split into contiguous
    ranges; results are merged by union.
    """
    ranges = _ranges(1 << H15_BITS, max(1, workers) * 4)
    if workers > 1:
        with Pool(workers) as pool:
            blocks = pool.map(_case1_block, ranges)
    else:
        blocks = [_case1_block(r) for r in ranges]
    found: Set[int] = set()
    for block in blocks:
        found |= block
    log.info("Case 1 brute force: %d distinct polynomials", len(found))
    return frozenset(found)


def enumerate_case1_bruteforce(workers: int = 1) -> FrozenSet[IntPoly]:
    return frozenset(mask_to_poly(mask) for mask in enumerate_case1_masks(workers))


def _case2_vectors() -> List[Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]]:
    d = P * Q
    bound = N // d
    nb, nc = d // P, d // Q
    out = []
    for b in product(range(bound + 1), repeat=nb):
        if min(b) != 0:
            continue
        for c in product(range(bound + 1), repeat=nc):
            if max(b) + max(c) > bound:
                continue
            residue = tuple(b[j % nb] + c[j % nc] for j in range(d))
            if sum(residue) != K:
                continue
            out.append((residue, b, c))
    return out


def enumerate_case2_bruteforce(cache: Optional[CyclotomicCache] = None) -> int:
    """
    Sum of prod_j C(3, d_j) over residue vectors d mod x^15 - 1 of weight 22
    that Phi_15 divides.
    """
    if cache is None:
        cache = CyclotomicCache()
    fibre = N // (P * Q)
    seen: Set[Tuple[int, ...]] = set()
    total = 0
    for residue, _, _ in _case2_vectors():
        if residue in seen:
            continue
        seen.add(residue)
        if not divides_cyclotomic(IntPoly(residue), P * Q, cache):
            raise ArithmeticError(f"Residue vector {residue} is not divisible by Phi_15")
        lifts = 1
        for value in residue:
            lifts *= comb(fibre, value)
        total += lifts
    log.info("Case 2 brute force: %d residue vectors, %d polynomials", len(seen), total)
    return total


def case2_residue_vectors() -> List[UniformizedMember]:
    """Distinct residue vectors of Case 2 with their (b, c) parameters."""
    return uniformized_family(P * Q, P, Q, bound=N // (P * Q), weight=K, n=N)


def count_double(
    polys: Optional[Sequence[IntPoly]] = None,
    cache: Optional[CyclotomicCache] = None,
) -> int:
    """Case 1 polynomials that Phi_15 also divides."""
    if polys is None:
        polys = [IntPoly(m.residue) for m in uniformized_family(N, P, Q, bound=1, weight=K)]
    if cache is None:
        cache = CyclotomicCache()
    return sum(1 for f in polys if divides_cyclotomic(f, P * Q, cache))
