"""
Polynomial operations: division, extended gcd, residues and the resultant.

All functions are pure and exact. Integer-only entry points (exact_div)
require monic divisors so the quotient never leaves Z[x].
"""

from __future__ import annotations

import operator
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from utils.errors import AllZero, DivisionByZeroPoly, NotDivisible, NotMonic, OutOfRange

from .dense import IntPoly, RatPoly, long_division

AnyPoly = Union[IntPoly, RatPoly]


def _rat(a: AnyPoly) -> RatPoly:
    return a.to_rat()


def add(a: AnyPoly, b: AnyPoly) -> AnyPoly:
    return a + b


def mul(a: AnyPoly, b: AnyPoly) -> AnyPoly:
    return a * b


def divrem(a: AnyPoly, b: AnyPoly) -> Tuple[RatPoly, RatPoly]:
    """
    Euclidean division over the rationals.

    Args:
        a: Dividend
        b: Divisor, nonzero

    Returns:
        (quotient, remainder) with a = quotient*b + remainder and
        deg remainder < deg b

    Raises:
        DivisionByZeroPoly: If b is zero
    """
    if b.is_zero:
        raise DivisionByZeroPoly(f"Cannot divide {a} by the zero polynomial")
    num = list(_rat(a).coeffs)
    den = list(_rat(b).coeffs)
    quot, rem = long_division(num, den, operator.truediv)
    return RatPoly(quot), RatPoly(rem)


def exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """
    Integer quotient a / b for a monic divisor that divides a exactly.

    Raises:
        DivisionByZeroPoly: If b is zero
        NotMonic: If b is not monic
        NotDivisible: If the remainder is nonzero

    Example:
        >>> str(exact_div(IntPoly.parse("-1 + x^9"), IntPoly.parse("-1 + x^3")))
        '1 + x^3 + x^6'
    """
    if b.is_zero:
        raise DivisionByZeroPoly(f"Cannot divide {a} by the zero polynomial")
    if not b.is_monic():
        raise NotMonic(f"Divisor {b} is not monic")
    quot, rem = long_division(a.coeffs, b.coeffs)
    if any(rem):
        raise NotDivisible(f"{b} does not divide {a} (remainder {IntPoly(rem)})")
    return IntPoly(quot)


def rem_monic(a: IntPoly, b: IntPoly) -> IntPoly:
    """Remainder of a by a monic integer divisor; stays in Z[x]."""
    if b.is_zero:
        raise DivisionByZeroPoly(f"Cannot divide {a} by the zero polynomial")
    if not b.is_monic():
        raise NotMonic(f"Divisor {b} is not monic")
    return IntPoly(long_division(a.coeffs, b.coeffs)[1])


def xgcd(a: AnyPoly, b: AnyPoly) -> Tuple[RatPoly, RatPoly, RatPoly]:
    """
    Extended Euclid over Q[x].

    Returns:
        (g, s, t) with s*a + t*b = g and g monic; all three are zero when
        both inputs are zero
    """
    r0, r1 = _rat(a), _rat(b)
    s0, s1 = RatPoly.one(), RatPoly.zero()
    t0, t1 = RatPoly.zero(), RatPoly.one()

    while r1:
        q, r = divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
        if r1:
            # keep the running remainder monic to stop coefficient blow-up
            inv = 1 / r1.leading
            r1, s1, t1 = r1 * inv, s1 * inv, t1 * inv

    if r0.is_zero:
        return RatPoly.zero(), RatPoly.zero(), RatPoly.zero()
    inv = 1 / r0.leading
    return r0 * inv, s0 * inv, t0 * inv


def xgcd_multi(polys: Sequence[AnyPoly]) -> Tuple[RatPoly, List[RatPoly]]:
    """
    Monic gcd of several polynomials with certifying cofactors.

    Folds xgcd left to right, so sum(c * p for c, p in zip(cofactors, polys))
    equals the returned gcd exactly.

    Raises:
        AllZero: If every input is zero
        ValueError: If polys is empty
    """
    if not polys:
        raise ValueError("xgcd_multi needs at least one polynomial")

    g = RatPoly.zero()
    cofactors: List[RatPoly] = []
    for p in polys:
        g, s, t = xgcd(g, p)
        cofactors = [s * c for c in cofactors]
        cofactors.append(t)

    if g.is_zero:
        raise AllZero(f"All {len(polys)} inputs are zero")
    return g, cofactors


def reduce_mod_xn_minus_1(a: AnyPoly, n: int) -> AnyPoly:
    """
    Residue of a modulo x^n - 1.

    Example:
        >>> str(reduce_mod_xn_minus_1(IntPoly.monomial(15), 15))
        '1'
    """
    if n < 1:
        raise OutOfRange(f"n must be >= 1, got {n}")
    return a.reduce_mod_xn_minus_1(n)


def weight(a: AnyPoly):
    """Evaluation at 1."""
    return a.weight()


def is_bounded(a: AnyPoly, d: int) -> bool:
    return a.is_bounded(d)


def is_unital(a: AnyPoly) -> bool:
    return a.is_bounded(1)


def resultant(a: AnyPoly, b: AnyPoly) -> Fraction:
    """
    Resultant Res(a, b) by the Euclidean remainder sequence.

    Uses Res(a, b) = (-1)^(deg a * deg b) * lc(b)^(deg a - deg r) * Res(b, r)
    with r = a mod b, and Res(a, c) = c^(deg a) for a constant c. For a
    monic a this equals the product of b over the roots of a.

    Example:
        >>> resultant(IntPoly.parse("-1 + x^3"), IntPoly.parse("1 + x"))
        Fraction(2, 1)
    """
    a, b = _rat(a), _rat(b)
    if a.is_zero or b.is_zero:
        return Fraction(0)

    res = Fraction(1)
    while True:
        m = a.degree
        if b.degree == 0:
            return res * b.leading ** m
        r = divrem(a, b)[1]
        if r.is_zero:
            return Fraction(0)
        n = b.degree
        if (m * n) % 2:
            res = -res
        res *= b.leading ** (m - r.degree)
        a, b = b, r
