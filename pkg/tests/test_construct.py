#!/usr/bin/env python3
"""
Tests for order classification and the singular-matrix construction.

Usage:
    python3 -m pytest tests/test_construct.py
    python3 -m pytest tests/test_construct.py --slow
"""

import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest

from circulant import det_elimination, det_resultant, is_singular
from construct import (
    classify,
    construct_singular,
    eligible_exponents,
    feasibility_margin,
    solve_ab,
    verify_guaranteed_nonsingular,
)
from cyclo import CyclotomicCache, divides_cyclotomic
from models.registry import OrderKind
from utils.errors import ConstructionError, NoSingularGuarantee, OutOfRange
from utils.settings import Settings

E22 = (0, 9, 18, 27, 36, 3, 12, 21, 30, 39, 1, 16, 31, 2, 17, 32, 4, 19, 34, 5, 20, 35)


def test_classify():
    assert classify(4).kind == OrderKind.PRIME_POWER
    assert (classify(4).p, classify(4).e) == (3, 2)
    assert classify(7).kind == OrderKind.TWO_PRIMES
    assert (classify(7).p, classify(7).q) == (3, 5)
    order = classify(22)
    assert (order.kind, order.p, order.q, order.r) == (OrderKind.COMPOSITE, 3, 5, 3)
    assert order.singular_possible
    assert not classify(7).singular_possible
    assert classify(52).to_dict() == {"k": 52, "n": 105, "kind": "composite", "p": 3, "q": 5, "r": 7}
    with pytest.raises(OutOfRange):
        classify(0)


def test_solve_ab():
    assert solve_ab(22, 3, 5) == (4, 2)
    assert solve_ab(52, 3, 5) == (14, 2)
    with pytest.raises(ConstructionError):
        solve_ab(4, 3, 5)


def test_eligible_exponents():
    assert eligible_exponents(5, 3) == [1, 2, 4, 5, 7, 8, 10, 11, 13, 14]


def test_construct_k22_reproduces_e22():
    construction = construct_singular(22)
    assert construction.n == 45
    assert (construction.a, construction.b) == (4, 2)
    assert construction.r_a == (1, 2, 4, 5)
    assert construction.spec.support == tuple(sorted(E22))
    assert feasibility_margin(22) == 6
    out = construction.to_dict()
    assert out["R_a"] == [1, 2, 4, 5]
    assert out["singular"] is True
    assert (out["p"], out["q"], out["r"]) == (3, 5, 3)


def test_construct_k52():
    construction = construct_singular(52)
    assert construction.n == 105
    assert (construction.a, construction.b) == (14, 2)
    assert feasibility_margin(52) == 16
    assert construction.spec.weight == 52
    assert is_singular(construction.spec).singular


def test_seeded_construction_is_reproducible():
    first = construct_singular(22, seed=11)
    second = construct_singular(22, seed=11)
    assert first.r_a == second.r_a
    assert set(first.r_a) <= set(eligible_exponents(5, 3))
    assert len(first.r_a) == 4
    assert 45 in is_singular(first.spec).witnesses


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16])
def test_no_guarantee_for_prime_powers_and_two_primes(k):
    with pytest.raises(NoSingularGuarantee):
        construct_singular(k)


def test_every_composite_order_gets_a_singular_matrix():
    checked = 0
    for k in range(1, 130):
        if classify(k).kind != OrderKind.COMPOSITE:
            continue
        construction = construct_singular(k)
        spec = construction.spec
        assert spec.is_unital and spec.weight == k
        assert construction.n in is_singular(spec).witnesses
        assert feasibility_margin(k) > 0
        checked += 1
    assert checked > 5


def test_composite_orders_up_to_k500():
    cache = CyclotomicCache()
    checked = 0
    for k in range(130, 501):
        if classify(k).kind != OrderKind.COMPOSITE:
            continue
        construction = construct_singular(k, cache=cache)
        spec = construction.spec
        assert spec.is_unital and spec.weight == k
        assert divides_cyclotomic(spec.row, construction.n, cache)
        assert feasibility_margin(k) > 0
        checked += 1
    assert checked > 50


def test_feasibility_margin_positive_up_to_10000():
    composite = [k for k in range(1, 10001) if classify(k).kind == OrderKind.COMPOSITE]
    assert len(composite) > 1000
    assert min(feasibility_margin(k) for k in composite) > 0


@pytest.mark.parametrize("k", [22, 31])
def test_constructions_have_zero_elimination_determinant(k):
    # 45 and 63 are the composite orders within the elimination bound
    construction = construct_singular(k)
    assert construction.n <= 64
    assert det_elimination(construction.spec) == 0
    assert det_resultant(construction.spec) == 0


@pytest.mark.parametrize(
    "k, universe",
    [(4, 126), (7, 6435), (10, 352716), (12, 5200300)],
)
def test_guaranteed_nonsingular_orders(k, universe):
    check = verify_guaranteed_nonsingular(k)
    assert check.universe == universe
    assert check.singular == 0
    assert check.holds


@pytest.mark.slow
@pytest.mark.parametrize(
    "k, universe",
    [(13, 20058300), (16, 1166803110)],
)
def test_guaranteed_nonsingular_orders_slow(k, universe):
    check = verify_guaranteed_nonsingular(k, workers=2)
    assert check.universe == universe
    assert check.holds


def test_composite_orders_are_not_guaranteed():
    with pytest.raises(OutOfRange):
        verify_guaranteed_nonsingular(22)


def test_exhaustive_limit_from_settings():
    settings = Settings(exhaustive_limit=20)
    with pytest.raises(OutOfRange):
        verify_guaranteed_nonsingular(13, limit=settings.exhaustive_limit)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
