"""
Recurrent decompositions f = sum_j h_{n/p_j} * G(n, n/p_j).

One multiplier per distinct prime p_j of n, with deg h_{n/p_j} < n/p_j.
A decomposition exists over Q whenever Phi_n divides f: Phi_n is the gcd
of the G(n, n/p_j), so an xgcd certificate Phi_n = sum g_j G(n, n/p_j)
times q = f / Phi_n gives multipliers, which are then folded modulo
x^{n/p_j} - 1 to meet the degree bounds.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple, Union

from cyclo import CyclotomicCache, cyclotomic, factorize, fundamental_recurrent
from poly import IntPoly, RatPoly, divrem, xgcd_multi
from utils.errors import (
    DegreeTooLarge,
    NotDivisibleByPhiN,
    NotTwoPrimeOrder,
    OutOfRange,
)

AnyPoly = Union[IntPoly, RatPoly]


@dataclass(frozen=True)
class Decomposition:
    """
    Multipliers keyed by prime, ascending.

    `parts[i] = (p, h)` means h multiplies G(n, n/p).
    """

    n: int
    parts: Tuple[Tuple[int, RatPoly], ...]

    def __post_init__(self) -> None:
        primes = factorize(self.n).primes
        keys = tuple(p for p, _ in self.parts)
        if tuple(sorted(keys)) != primes:
            raise ValueError(f"Decomposition keys {keys} must be the primes {primes} of {self.n}")
        normalized = []
        for p, h in sorted(self.parts, key=lambda item: item[0]):
            h = h.to_rat() if isinstance(h, (IntPoly, RatPoly)) else RatPoly(h)
            if len(h.coeffs) > self.n // p:
                raise DegreeTooLarge(
                    f"Multiplier for p={p} has degree {h.degree}, bound is < {self.n // p}"
                )
            normalized.append((p, h))
        object.__setattr__(self, "parts", tuple(normalized))

    @classmethod
    def from_parts(cls, n: int, parts: Mapping[int, AnyPoly]) -> "Decomposition":
        return cls(n=n, parts=tuple((p, h.to_rat()) for p, h in parts.items()))

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.parts)

    def multiplier(self, p: int) -> RatPoly:
        for prime, h in self.parts:
            if prime == p:
                return h
        raise KeyError(p)

    def as_dict(self) -> Dict[int, RatPoly]:
        return dict(self.parts)

    def reconstruct(self) -> RatPoly:
        total = RatPoly.zero()
        for p, h in self.parts:
            total = total + h * fundamental_recurrent(self.n, self.n // p)
        return total

    def verify(self, f: AnyPoly) -> bool:
        return self.reconstruct() == f

    def is_integral(self) -> bool:
        return all(h.is_integral() for _, h in self.parts)

    def is_bounded(self, d: int) -> bool:
        return all(h.is_bounded(d) for _, h in self.parts)

    def is_unital(self) -> bool:
        return self.is_bounded(1)

    def int_parts(self) -> Dict[int, IntPoly]:
        return {p: h.to_int() for p, h in self.parts}


def two_prime_shape(n: int) -> Tuple[int, int, int]:
    """
    (p, q, m) for n with exactly two distinct primes p < q, m = n/(p*q).

    Raises:
        NotTwoPrimeOrder: Otherwise
    """
    if n < 2:
        raise NotTwoPrimeOrder(f"n={n} has no prime factors")
    primes = factorize(n).primes
    if len(primes) != 2:
        raise NotTwoPrimeOrder(f"n={n} has {len(primes)} distinct prime factors, expected 2")
    p, q = primes
    return p, q, n // (p * q)


@dataclass(frozen=True)
class CoefficientGrouping:
    """
    Coefficients of f and of the two multipliers along one residue s mod m.

    With m = n/(p*q): a holds a_{l*m+s} for l < p*q, b holds the coefficients
    b_{l*m+s} of h_{n/p} for l < q, c holds c_{l*m+s} of h_{n/q} for l < p.
    """

    s: int
    p: int
    q: int
    a: Tuple[Fraction, ...]
    b: Tuple[Fraction, ...]
    c: Tuple[Fraction, ...]

    @property
    def min_b(self) -> Fraction:
        return min(self.b)

    def sum_law_holds(self) -> bool:
        """a_{l*m+s} = b_{(l mod q)*m+s} + c_{(l mod p)*m+s} for every l < p*q."""
        return all(
            self.a[l] == self.b[l % self.q] + self.c[l % self.p]
            for l in range(self.p * self.q)
        )


def groupings(dec: Decomposition) -> List[CoefficientGrouping]:
    """Groupings for s = 0, ..., m-1 of a two-prime decomposition."""
    p, q, m = two_prime_shape(dec.n)
    f = dec.reconstruct()
    hb, hc = dec.multiplier(p), dec.multiplier(q)
    out = []
    for s in range(m):
        out.append(
            CoefficientGrouping(
                s=s,
                p=p,
                q=q,
                a=tuple(Fraction(f.coefficient(l * m + s)) for l in range(p * q)),
                b=tuple(Fraction(hb.coefficient(l * m + s)) for l in range(q)),
                c=tuple(Fraction(hc.coefficient(l * m + s)) for l in range(p)),
            )
        )
    return out


@functools.lru_cache(maxsize=None)
def phi_certificate(n: int) -> Tuple[Tuple[int, RatPoly], ...]:
    """
    Cofactors g_p with Phi_n = sum_p g_p * G(n, n/p).

    Raises:
        OutOfRange: If n < 2
    """
    if n < 2:
        raise OutOfRange(f"phi_certificate() needs n >= 2, got {n}")
    primes = factorize(n).primes
    gens = [fundamental_recurrent(n, n // p) for p in primes]
    gcd, cofactors = xgcd_multi(gens)
    if gcd != cyclotomic(n):
        raise ArithmeticError(f"gcd of fundamental recurrents for n={n} is {gcd}, not Phi_n")
    return tuple(zip(primes, cofactors))


def decompose_rational(
    f: AnyPoly,
    n: int,
    cache: Optional[CyclotomicCache] = None,
) -> Decomposition:
    """
    A recurrent decomposition of f with respect to n over Q.

    Raises:
        OutOfRange: If n < 2
        DegreeTooLarge: If deg f >= n
        NotDivisibleByPhiN: If Phi_n does not divide f
    """
    if n < 2:
        raise OutOfRange(f"decompose_rational() needs n >= 2, got {n}")
    if len(f.coeffs) > n:
        raise DegreeTooLarge(f"deg f = {f.degree} must be < n = {n}")

    quotient, remainder = divrem(f, cyclotomic(n, cache))
    if remainder:
        raise NotDivisibleByPhiN(f"Phi_{n} does not divide {f}")

    parts = []
    for p, g in phi_certificate(n):
        parts.append((p, (quotient * g).reduce_mod_xn_minus_1(n // p)))
    return Decomposition(n=n, parts=tuple(parts))
