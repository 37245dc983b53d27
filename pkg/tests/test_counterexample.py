#!/usr/bin/env python3
"""
Tests for the n = 105 polynomial without a unital recurrent decomposition.

Usage:
    python3 -m pytest tests/test_counterexample.py
"""

import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest

from decomp import counterexample_polynomial, decompose_rational, verify_no_unital_decomposition_105
from decomp.counterexample import EXPECTED_RESIDUES, EXPECTED_SOLUTIONS, identity_combination
from poly import IntPoly


@pytest.fixture(scope="module")
def evidence():
    return verify_no_unital_decomposition_105()


def test_polynomial_shape():
    f = counterexample_polynomial()
    assert f.weight() == 16
    assert f.is_unital()
    assert f.degree == 100


def test_explicit_identity(evidence):
    assert identity_combination() == counterexample_polynomial()
    assert evidence.identity_holds
    assert evidence.phi_n_divides


def test_residues(evidence):
    assert evidence.residues == EXPECTED_RESIDUES
    assert evidence.residues[15] == IntPoly.constant(-7)
    assert str(evidence.residues[21]) == "5*x^6"
    assert str(evidence.residues[35]) == "-3*x^20"


def test_recurrents_vanish_off_their_own_order(evidence):
    for (r, d), residue in evidence.g_residues.items():
        assert residue.is_zero == (r != d)


def test_every_weight_split_is_refuted(evidence):
    assert evidence.solutions == EXPECTED_SOLUTIONS
    assert [c.vanishing for c in evidence.contradictions] == [15, 21]
    assert all(c.holds for c in evidence.contradictions)
    assert evidence.all_checks_pass


def test_rational_decomposition_is_not_unital(evidence):
    dec = evidence.rational_decomposition
    assert dec.primes == (3, 5, 7)
    assert dec.verify(counterexample_polynomial())
    assert not dec.is_unital()
    assert decompose_rational(counterexample_polynomial(), 105).verify(counterexample_polynomial())


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
