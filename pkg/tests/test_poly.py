#!/usr/bin/env python3
"""
Tests for exact polynomial arithmetic.

Usage:
    python3 -m pytest tests/test_poly.py
"""

import sys
from fractions import Fraction
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest
from hypothesis import given, settings, strategies as st

from poly import (
    NEG_INFINITY,
    IntPoly,
    RatPoly,
    divrem,
    exact_div,
    is_bounded,
    is_unital,
    mul,
    reduce_mod_xn_minus_1,
    rem_monic,
    resultant,
    weight,
    xgcd,
    xgcd_multi,
)
from utils.errors import AllZero, DivisionByZeroPoly, NotDivisible, NotIntegral, NotMonic, OutOfRange

small_ints = st.integers(min_value=-20, max_value=20)
int_polys = st.lists(small_ints, max_size=8).map(IntPoly)
rat_polys = st.lists(
    st.fractions(min_value=-5, max_value=5, max_denominator=6), max_size=6
).map(RatPoly)
nonzero_rat_polys = rat_polys.filter(lambda p: not p.is_zero)
monic_int_polys = st.lists(small_ints, max_size=5).map(lambda cs: IntPoly(cs + [1]))


def test_canonical_form():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).is_zero
    assert IntPoly.zero().degree is NEG_INFINITY
    assert NEG_INFINITY < -10**9
    assert IntPoly([5]).degree == 0
    assert RatPoly(["1/2", 0]).coeffs == (Fraction(1, 2),)


def test_text_form():
    assert str(IntPoly([-1, 0, 0, 1])) == "-1 + x^3"
    assert str(RatPoly([0, 0, Fraction(3, 4)])) == "3/4*x^2"
    assert str(IntPoly.zero()) == "0"
    assert str(IntPoly([0, -1, 2])) == "-x + 2*x^2"
    assert IntPoly.parse("-1 + x^3") == IntPoly([-1, 0, 0, 1])
    assert RatPoly.parse("1/2 + 3*x") == RatPoly([Fraction(1, 2), 3])
    assert IntPoly.parse(" 0 ") == IntPoly.zero()
    with pytest.raises(ValueError):
        IntPoly.parse("1 + y")


def test_equality_across_types():
    assert IntPoly([1, 1]) == RatPoly([1, 1])
    assert hash(IntPoly([1, 1])) == hash(RatPoly([1, 1]))
    assert IntPoly.one() == 1
    assert IntPoly.zero() == 0


def test_json_coeffs():
    p = RatPoly([Fraction(-1, 3), 0, 2])
    assert p.to_json_coeffs() == ["-1/3", "0", "2"]
    assert RatPoly.from_json_coeffs(p.to_json_coeffs()) == p


def test_evaluation_and_predicates():
    f = IntPoly.from_exponents([0, 2, 3])
    assert f(1) == 3
    assert f(2) == 13
    assert weight(f) == 3
    assert is_unital(f)
    assert not is_unital(IntPoly([2]))
    assert is_bounded(IntPoly([0, 3, 1]), 3)
    assert not is_bounded(IntPoly([-1]), 3)


def test_shift_and_power():
    assert IntPoly([1, 1]).shift(2) == IntPoly([0, 0, 1, 1])
    assert IntPoly([1, 1]) ** 3 == IntPoly([1, 3, 3, 1])
    assert IntPoly([1, 1]) ** 0 == IntPoly.one()
    with pytest.raises(OutOfRange):
        IntPoly.monomial(-1)


def test_exact_div_and_errors():
    assert exact_div(IntPoly.parse("-1 + x^9"), IntPoly.parse("-1 + x^3")) == IntPoly.parse("1 + x^3 + x^6")
    with pytest.raises(NotDivisible):
        exact_div(IntPoly.parse("1 + x^2"), IntPoly.parse("1 + x"))
    with pytest.raises(NotMonic):
        exact_div(IntPoly.parse("2*x^2"), IntPoly.parse("2*x"))
    with pytest.raises(DivisionByZeroPoly):
        divrem(IntPoly.one(), IntPoly.zero())
    assert rem_monic(IntPoly.monomial(4), IntPoly.parse("1 + x + x^2")) == IntPoly.parse("x")


def test_to_int():
    assert RatPoly([2, 4]).to_int() == IntPoly([2, 4])
    with pytest.raises(NotIntegral):
        RatPoly([Fraction(1, 2)]).to_int()


def test_reduce_mod_xn_minus_1():
    assert reduce_mod_xn_minus_1(IntPoly.monomial(15), 15) == IntPoly.one()
    assert reduce_mod_xn_minus_1(IntPoly.from_exponents([0, 5, 10, 15]), 5) == IntPoly([4])
    with pytest.raises(OutOfRange):
        reduce_mod_xn_minus_1(IntPoly.one(), 0)


def test_xgcd_multi_certificate():
    gens = [IntPoly.parse("1 + x^3"), IntPoly.parse("1 + x + x^2 + x^3 + x^4 + x^5")]
    g, cofactors = xgcd_multi(gens)
    assert g == IntPoly.parse("1 + x^3")
    assert sum((c * p for c, p in zip(cofactors, gens)), RatPoly.zero()) == g
    with pytest.raises(AllZero):
        xgcd_multi([IntPoly.zero(), IntPoly.zero()])
    with pytest.raises(ValueError):
        xgcd_multi([])


def test_resultant_small_cases():
    assert resultant(IntPoly.parse("-1 + x^3"), IntPoly.parse("1 + x")) == 2
    assert resultant(IntPoly.parse("-1 + x^2"), IntPoly.parse("1 + x")) == 0
    assert resultant(IntPoly.parse("x"), IntPoly.constant(7)) == 7


@settings(max_examples=60, deadline=None)
@given(int_polys, int_polys, int_polys)
def test_ring_identities(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == IntPoly.zero()


@settings(max_examples=60, deadline=None)
@given(rat_polys, nonzero_rat_polys)
def test_division_identity(a, b):
    q, r = divrem(a, b)
    assert q * b + r == a
    assert r.is_zero or r.degree < b.degree


@settings(max_examples=40, deadline=None)
@given(rat_polys, rat_polys)
def test_xgcd_bezout(a, b):
    g, s, t = xgcd(a, b)
    assert s * a + t * b == g
    if not g.is_zero:
        assert g.is_monic()
        assert divrem(a, g)[1].is_zero
        assert divrem(b, g)[1].is_zero


@settings(max_examples=40, deadline=None)
@given(int_polys, st.integers(min_value=1, max_value=9))
def test_fold_preserves_value_at_one(a, n):
    folded = reduce_mod_xn_minus_1(a, n)
    assert folded.weight() == a.weight()
    assert len(folded.coeffs) <= n


@settings(max_examples=60, deadline=None)
@given(int_polys, monic_int_polys)
def test_exact_div_undoes_monic_product(a, b):
    assert exact_div(mul(a, b), b) == a
    assert rem_monic(mul(a, b), b).is_zero


@settings(max_examples=40, deadline=None)
@given(st.lists(rat_polys, min_size=1, max_size=4).filter(lambda ps: any(not p.is_zero for p in ps)))
def test_xgcd_multi_certificate_on_random_sets(polys):
    g, cofactors = xgcd_multi(polys)
    assert len(cofactors) == len(polys)
    assert sum((c * p for c, p in zip(cofactors, polys)), RatPoly.zero()) == g
    assert g.is_monic()
    for p in polys:
        assert divrem(p, g)[1].is_zero


def test_xgcd_multi_single_input():
    f = RatPoly([2, 4])
    g, cofactors = xgcd_multi([f])
    assert g == RatPoly([Fraction(1, 2), 1])
    assert cofactors == [RatPoly([Fraction(1, 4)])]


@settings(max_examples=60, deadline=None)
@given(int_polys, int_polys, st.integers(min_value=1, max_value=9))
def test_fold_is_a_ring_homomorphism(a, b, n):
    fa, fb = reduce_mod_xn_minus_1(a, n), reduce_mod_xn_minus_1(b, n)
    assert reduce_mod_xn_minus_1(a * b, n) == reduce_mod_xn_minus_1(fa * fb, n)
    assert reduce_mod_xn_minus_1(a + b, n) == reduce_mod_xn_minus_1(fa + fb, n)


@settings(max_examples=60, deadline=None)
@given(int_polys, int_polys)
def test_weight_is_multiplicative(a, b):
    assert weight(mul(a, b)) == weight(a) * weight(b)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
