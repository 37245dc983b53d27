"""
Normal form of two-prime decompositions.

For n = p^a q^b (p < q) and m = n/(p*q), two decompositions of the same f
differ by a shift
    h_{n/p} -> h_{n/p} - delta * G(n/p, m),  h_{n/q} -> h_{n/q} + delta * G(n/q, m)
with deg delta < m. Choosing delta so that every group B_s has minimum 0
gives the unique p-uniformized decomposition.
"""

from __future__ import annotations

import logging
from typing import Optional

from cyclo import CyclotomicCache, fundamental_recurrent
from poly import IntPoly, RatPoly, divrem
from utils.errors import CoefficientsOutOfRange, NoDeltaExists, NotSameF

from .decomposition import Decomposition, decompose_rational, groupings, two_prime_shape

log = logging.getLogger(__name__)


def _shift(dec: Decomposition, delta: RatPoly) -> Decomposition:
    p, q, m = two_prime_shape(dec.n)
    hb = dec.multiplier(p) - delta * fundamental_recurrent(dec.n // p, m)
    hc = dec.multiplier(q) + delta * fundamental_recurrent(dec.n // q, m)
    return Decomposition(n=dec.n, parts=((p, hb), (q, hc)))


def uniformize_p(dec: Decomposition) -> Decomposition:
    """
    The p-uniformized decomposition of the same polynomial.

    Raises:
        NotTwoPrimeOrder: If n does not have exactly two distinct primes
    """
    two_prime_shape(dec.n)
    minima = [g.min_b for g in groupings(dec)]
    if not any(minima):
        return dec
    return _shift(dec, RatPoly(minima))


def is_p_uniformized(dec: Decomposition) -> bool:
    return all(g.min_b == 0 for g in groupings(dec))


def decompose_bounded(
    f: IntPoly,
    n: int,
    d: int,
    cache: Optional[CyclotomicCache] = None,
) -> Decomposition:
    """
    Decomposition with both multipliers in Z_[0,d][x].

    Raises:
        NotTwoPrimeOrder: If n does not have exactly two distinct primes
        CoefficientsOutOfRange: If f has a coefficient outside {0, ..., d}
        NotDivisibleByPhiN: If Phi_n does not divide f
    """
    two_prime_shape(n)
    if d < 0 or not f.is_bounded(d):
        raise CoefficientsOutOfRange(f"Coefficients of {f} are not all in [0, {d}]")

    dec = uniformize_p(decompose_rational(f, n, cache))
    if not dec.is_bounded(d):
        raise ArithmeticError(f"Uniformized decomposition of {f} left the range [0, {d}]")
    log.debug("Bounded decomposition of weight-%d polynomial for n=%d", f.weight(), n)
    return dec


def ambiguity_delta(dec1: Decomposition, dec2: Decomposition) -> RatPoly:
    """
    delta with dec2 = dec1 shifted by delta (deg delta < n/(p*q)).

    Raises:
        NotSameF: If the decompositions do not describe the same polynomial
        NoDeltaExists: If the difference is not a shift
    """
    if dec1.n != dec2.n:
        raise NotSameF(f"Decompositions are for n={dec1.n} and n={dec2.n}")
    p, q, m = two_prime_shape(dec1.n)
    if dec1.reconstruct() != dec2.reconstruct():
        raise NotSameF("Decompositions reconstruct different polynomials")

    diff_b = dec1.multiplier(p) - dec2.multiplier(p)
    delta, remainder = divrem(diff_b, fundamental_recurrent(dec1.n // p, m))
    if remainder or len(delta.coeffs) > m:
        raise NoDeltaExists(f"h_{dec1.n // p} difference {diff_b} is not a shift")

    diff_c = dec2.multiplier(q) - dec1.multiplier(q)
    if diff_c != delta * fundamental_recurrent(dec1.n // q, m):
        raise NotSameF(f"h_{dec1.n // q} difference disagrees with delta {delta}")
    return delta
