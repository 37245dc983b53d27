"""
Cyclotomic polynomials and fundamental recurrent polynomials.

Phi_n is computed by dividing x^n - 1 by Phi_d for every proper divisor d,
recursing through an explicit cache. G(n, r) = (x^n - 1)/(x^r - 1) is the
unital polynomial 1 + x^r + ... + x^(n-r).
"""

from __future__ import annotations

from typing import Dict, FrozenSet, Iterator, Optional, Union

from poly import IntPoly, RatPoly, divrem, exact_div, rem_monic
from utils.errors import NotProperDivisor, OutOfRange

from .arith import divisors


class CyclotomicCache:
    """
    Memo of computed cyclotomic polynomials.

    Entries are written once and never replaced. Two callers racing on the
    same n both compute it; the first insert wins and both values are equal.
    """

    def __init__(self) -> None:
        self._memo: Dict[int, IntPoly] = {}

    def get(self, n: int) -> Optional[IntPoly]:
        return self._memo.get(n)

    def put(self, n: int, poly: IntPoly) -> IntPoly:
        return self._memo.setdefault(n, poly)

    def __contains__(self, n: object) -> bool:
        return n in self._memo

    def __len__(self) -> int:
        return len(self._memo)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._memo))


def cyclotomic(n: int, cache: Optional[CyclotomicCache] = None) -> IntPoly:
    """
    The n-th cyclotomic polynomial.

    Args:
        n: Order, n >= 1
        cache: Memo shared across calls; a private one is used when omitted

    Example:
        >>> str(cyclotomic(9))
        '1 + x^3 + x^6'
    """
    if n < 1:
        raise OutOfRange(f"cyclotomic() needs n >= 1, got {n}")
    if cache is None:
        cache = CyclotomicCache()

    hit = cache.get(n)
    if hit is not None:
        return hit

    poly = IntPoly.monomial(n) - 1
    for d in divisors(n)[:-1]:
        poly = exact_div(poly, cyclotomic(d, cache))
    return cache.put(n, poly)


def fundamental_recurrent(n: int, r: int) -> IntPoly:
    """
    G(n, r) = 1 + x^r + x^(2r) + ... + x^(n-r).

    Raises:
        NotProperDivisor: If r does not divide n or r == n

    Example:
        >>> str(fundamental_recurrent(6, 3))
        '1 + x^3'
    """
    if r < 1 or n < 1 or n % r != 0 or r == n:
        raise NotProperDivisor(f"{r} is not a proper divisor of {n}")
    return IntPoly.from_exponents(range(0, n, r))


def cyclotomic_residue(
    f: Union[IntPoly, RatPoly],
    d: int,
    cache: Optional[CyclotomicCache] = None,
) -> Union[IntPoly, RatPoly]:
    """
    Canonical residue of f modulo Phi_d (degree < phi(d)).

    f is folded modulo x^d - 1 first; Phi_d divides x^d - 1 so the residue
    is unchanged and the division stays short.
    """
    phi = cyclotomic(d, cache)
    folded = f.reduce_mod_xn_minus_1(d)
    if isinstance(folded, RatPoly):
        return divrem(folded, phi)[1]
    return rem_monic(folded, phi)


def divides_cyclotomic(
    f: Union[IntPoly, RatPoly],
    d: int,
    cache: Optional[CyclotomicCache] = None,
) -> bool:
    """True iff Phi_d divides f."""
    if f.is_zero:
        return True
    return cyclotomic_residue(f, d, cache).is_zero


def cyclotomic_divisors_of(
    f: Union[IntPoly, RatPoly],
    n: int,
    cache: Optional[CyclotomicCache] = None,
) -> FrozenSet[int]:
    """All d dividing n with Phi_d | f."""
    if cache is None:
        cache = CyclotomicCache()
    return frozenset(d for d in divisors(n) if divides_cyclotomic(f, d, cache))
