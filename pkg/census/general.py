"""
Experimental census for n = p^a q^b, k = (n - 1)/2.

Only divisors d with p*q | d can carry Phi_d | f: a prime power p^e would
need p | f(1) = k, which is coprime to n = 2k+1. Each relevant d
contributes the lifts of its uniformized bounded family. The overlap is
computed directly when there are exactly two relevant divisors (the larger
is then n itself); larger divisor lattices are refused.
"""

from __future__ import annotations

import logging
from typing import Optional

from cyclo import CyclotomicCache, divides_cyclotomic, divisors
from decomp import two_prime_shape
from poly import IntPoly
from utils.errors import NotTwoPrimeOrder, UnsupportedCensus

from .family import uniformized_family
from .report import CensusReport

log = logging.getLogger(__name__)


def census_two_prime(n: int, cache: Optional[CyclotomicCache] = None) -> CensusReport:
    """
    Census by uniformized families for two-prime orders.

    Raises:
        UnsupportedCensus: If n is even, n has the wrong shape, or more
            than two divisors are relevant
    """
    if n < 3 or n % 2 == 0:
        raise UnsupportedCensus(f"Census needs odd n >= 3, got {n}")
    k = (n - 1) // 2
    try:
        p, q, _ = two_prime_shape(n)
    except NotTwoPrimeOrder as e:
        raise UnsupportedCensus(f"Census needs two distinct primes: {e}") from e

    relevant = [d for d in divisors(n) if d % (p * q) == 0]
    if len(relevant) > 2:
        raise UnsupportedCensus(
            f"n={n} has {len(relevant)} divisors divisible by {p * q}; at most 2 are supported"
        )
    log.info("census_two_prime(n=%d): relevant divisors %s", n, relevant)

    if cache is None:
        cache = CyclotomicCache()
    top = uniformized_family(n, p, q, bound=1, weight=k, n=n)
    count_top = sum(member.lifts for member in top)

    count_sub = 0
    count_both = 0
    if len(relevant) == 2:
        sub = relevant[0]
        count_sub = sum(
            member.lifts
            for member in uniformized_family(sub, p, q, bound=n // sub, weight=k, n=n)
        )
        count_both = sum(
            1 for member in top if divides_cyclotomic(IntPoly(member.residue), sub, cache)
        )

    return CensusReport(
        n=n,
        k=k,
        count_phi_n=count_top,
        count_phi_sub=count_sub,
        count_both=count_both,
        experimental=True,
    )
