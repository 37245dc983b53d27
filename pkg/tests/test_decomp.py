#!/usr/bin/env python3
"""
Tests for recurrent decompositions and the p-uniformized normal form.

Usage:
    python3 -m pytest tests/test_decomp.py
"""

import sys
from fractions import Fraction
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cyclo import CyclotomicCache, cyclotomic, divides_cyclotomic, fundamental_recurrent
from decomp import (
    Decomposition,
    ambiguity_delta,
    decompose_bounded,
    decompose_rational,
    groupings,
    is_p_uniformized,
    phi_certificate,
    two_prime_shape,
    uniformize_p,
)
from poly import IntPoly, RatPoly
from utils.errors import (
    CoefficientsOutOfRange,
    DegreeTooLarge,
    NotDivisibleByPhiN,
    NotSameF,
    NotTwoPrimeOrder,
    OutOfRange,
)

E22 = (0, 9, 18, 27, 36, 3, 12, 21, 30, 39, 1, 16, 31, 2, 17, 32, 4, 19, 34, 5, 20, 35)
F_E22 = IntPoly.from_exponents(E22)
H15 = IntPoly.from_exponents([1, 2, 4, 5])
H9 = IntPoly.from_exponents([0, 3])


def _recombine(b, c, n=45, p=3, q=5):
    return b * fundamental_recurrent(n, n // p) + c * fundamental_recurrent(n, n // q)


def test_two_prime_shape():
    assert two_prime_shape(45) == (3, 5, 3)
    assert two_prime_shape(15) == (3, 5, 1)
    with pytest.raises(NotTwoPrimeOrder):
        two_prime_shape(105)
    with pytest.raises(NotTwoPrimeOrder):
        two_prime_shape(27)


def test_phi_certificate_reconstructs_phi_n():
    total = RatPoly.zero()
    for p, g in phi_certificate(45):
        total = total + g * fundamental_recurrent(45, 45 // p)
    assert total == cyclotomic(45)
    assert cyclotomic(45) == IntPoly.parse("1 - x^3 + x^9 - x^12 + x^15 - x^21 + x^24")
    with pytest.raises(OutOfRange):
        phi_certificate(1)


def test_e22_identity():
    assert _recombine(H15, H9) == F_E22


def test_e22_bounded_decomposition_is_unital():
    dec = decompose_bounded(F_E22, 45, 1)
    assert dec.primes == (3, 5)
    assert dec.multiplier(3) == H15
    assert dec.multiplier(5) == H9
    assert dec.is_unital()
    assert is_p_uniformized(dec)
    assert dec.int_parts() == {3: H15, 5: H9}


def test_rational_decomposition_verifies():
    dec = decompose_rational(F_E22, 45)
    assert dec.verify(F_E22)
    assert uniformize_p(dec) == decompose_bounded(F_E22, 45, 1)


def test_sum_law_per_group():
    dec = decompose_bounded(F_E22, 45, 1)
    groups = groupings(dec)
    assert [g.s for g in groups] == [0, 1, 2]
    assert all(g.sum_law_holds() for g in groups)
    assert all(g.min_b == 0 for g in groups)
    assert groups[1].b == tuple(Fraction(v) for v in (1, 1, 0, 0, 0))


def test_shift_is_detected_and_undone():
    dec = decompose_bounded(F_E22, 45, 1)
    delta = RatPoly([1, Fraction(-1, 2), 2])
    shifted = Decomposition.from_parts(
        45,
        {
            3: dec.multiplier(3) - delta * fundamental_recurrent(15, 3),
            5: dec.multiplier(5) + delta * fundamental_recurrent(9, 3),
        },
    )
    assert shifted.verify(F_E22)
    assert not is_p_uniformized(shifted)
    assert ambiguity_delta(dec, shifted) == delta
    assert uniformize_p(shifted) == dec


def test_ambiguity_errors():
    dec = decompose_bounded(F_E22, 45, 1)
    other = decompose_bounded(IntPoly(fundamental_recurrent(45, 15).coeffs), 45, 1)
    with pytest.raises(NotSameF):
        ambiguity_delta(dec, other)



def test_decomposition_errors():
    with pytest.raises(NotDivisibleByPhiN):
        decompose_rational(IntPoly.one(), 45)
    with pytest.raises(DegreeTooLarge):
        decompose_rational(IntPoly.monomial(45), 45)
    with pytest.raises(OutOfRange):
        decompose_rational(IntPoly.one(), 1)
    with pytest.raises(NotTwoPrimeOrder):
        decompose_bounded(F_E22, 105, 1)
    with pytest.raises(CoefficientsOutOfRange):
        decompose_bounded(IntPoly([2]), 45, 1)
    with pytest.raises(DegreeTooLarge):
        Decomposition.from_parts(45, {3: IntPoly.monomial(15), 5: IntPoly.zero()})
    with pytest.raises(ValueError):
        Decomposition.from_parts(45, {3: IntPoly.zero()})


def test_prime_power_decomposition():
    f = fundamental_recurrent(9, 3)
    dec = decompose_rational(f, 9)
    assert dec.primes == (3,)
    assert dec.multiplier(3) == IntPoly.one()


def test_bounded_decomposition_with_larger_bound():
    f = IntPoly(2 * c for c in fundamental_recurrent(45, 15).coeffs)
    dec = decompose_bounded(f, 45, 2)
    assert dec.multiplier(3) == IntPoly([2])
    assert dec.multiplier(5).is_zero
    assert dec.is_bounded(2) and not dec.is_unital()


def _shifted(dec, delta):
    p, q, m = two_prime_shape(dec.n)
    return Decomposition.from_parts(
        dec.n,
        {
            p: dec.multiplier(p) - delta * fundamental_recurrent(dec.n // p, m),
            q: dec.multiplier(q) + delta * fundamental_recurrent(dec.n // q, m),
        },
    )


def _random_unital_decomposition(rng, n):
    # each class s mod m goes to one side, so the recombination stays unital
    p, q, m = two_prime_shape(n)
    b = [0] * (n // p)
    c = [0] * (n // q)
    for s in range(m):
        side = b if rng.integers(0, 2) else c
        for j in range(s, len(side), m):
            side[j] = int(rng.integers(0, 2))
    return Decomposition.from_parts(n, {p: IntPoly(b), q: IntPoly(c)})


def test_random_shifts_are_recovered():
    rng = np.random.default_rng(20)
    for instance in range(20):
        n = (15, 45, 75)[instance % 3]
        _, _, m = two_prime_shape(n)
        truth = _random_unital_decomposition(rng, n)
        canonical = uniformize_p(truth)
        assert is_p_uniformized(canonical)
        for _ in range(200):
            delta = RatPoly(
                [Fraction(int(rng.integers(-6, 7)), int(rng.integers(1, 5))) for _ in range(m)]
            )
            shifted = _shifted(truth, delta)
            assert ambiguity_delta(truth, shifted) == delta
            assert uniformize_p(shifted) == canonical


@pytest.mark.parametrize("n", [15, 45, 75])
def test_unital_polynomials_have_unital_decompositions(n):
    rng = np.random.default_rng(n)
    cache = CyclotomicCache()
    for _ in range(30):
        f = _random_unital_decomposition(rng, n).reconstruct().to_int()
        assert f.is_unital()
        assert divides_cyclotomic(f, n, cache)
        dec = decompose_bounded(f, n, 1, cache)
        assert dec.is_unital()
        assert is_p_uniformized(dec)
        assert dec.verify(f)


def test_bounded_decomposition_of_single_recurrent_part():
    f = fundamental_recurrent(15, 5) * IntPoly.from_exponents([0, 2])
    assert f == IntPoly.from_exponents([0, 2, 5, 7, 10, 12])
    dec = decompose_bounded(f, 15, 1)
    assert dec.multiplier(3) == IntPoly.from_exponents([0, 2])
    assert dec.multiplier(5).is_zero


def test_ambiguity_between_rational_and_uniformized():
    raw = decompose_rational(F_E22, 45)
    uniform = uniformize_p(raw)
    delta = ambiguity_delta(raw, uniform)
    assert delta == RatPoly([g.min_b for g in groupings(raw)])
    assert _shifted(raw, delta) == uniform
    assert ambiguity_delta(uniform, uniform).is_zero


small_coeffs = st.integers(min_value=-3, max_value=3)


@settings(max_examples=25, deadline=None)
@given(st.lists(small_coeffs, min_size=15, max_size=15), st.lists(small_coeffs, min_size=9, max_size=9))
def test_uniformized_form_is_unique(b, c):
    truth = Decomposition.from_parts(45, {3: IntPoly(b), 5: IntPoly(c)})
    f = truth.reconstruct()
    found = decompose_rational(f, 45)
    assert found.verify(f)
    delta = ambiguity_delta(truth, found)
    assert delta.is_zero or delta.degree < 3
    assert uniformize_p(found) == uniformize_p(truth)
    assert is_p_uniformized(uniformize_p(found))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
