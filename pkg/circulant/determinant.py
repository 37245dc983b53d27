"""
Exact determinant oracles.

Both exist only to cross-check the cyclotomic decision; neither is used to
decide singularity.
"""

from __future__ import annotations

import logging
from typing import List, Sequence

from poly import IntPoly, resultant
from utils.errors import OracleBoundExceeded
from utils.settings import DEFAULT_ORACLE_BOUND

from .spec import CirculantSpec

log = logging.getLogger(__name__)


def det_resultant(spec: CirculantSpec) -> int:
    """
    det C = prod_j f(w_j) over the n-th roots of unity, evaluated as
    Res(x^n - 1, f).

    Example:
        >>> det_resultant(CirculantSpec.from_support(3, [0, 1]))
        2
    """
    value = resultant(IntPoly.monomial(spec.n) - 1, spec.row)
    if value.denominator != 1:
        raise ArithmeticError(f"Non-integral resultant {value} for n={spec.n}")
    return value.numerator


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """
    Fraction-free Gaussian elimination (Bareiss).

    Every intermediate division is exact, so the computation stays in Z.
    Row swaps flip the sign; a column without a pivot means det = 0.
    """
    m: List[List[int]] = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError(f"Matrix must be square, got {n} rows of lengths {[len(r) for r in m]}")

    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0

        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot

    return sign * m[n - 1][n - 1]


def det_elimination(spec: CirculantSpec, oracle_bound: int = DEFAULT_ORACLE_BOUND) -> int:
    """
    Determinant of the materialized matrix by Bareiss elimination.

    Raises:
        OracleBoundExceeded: If n > oracle_bound
    """
    if spec.n > oracle_bound:
        raise OracleBoundExceeded(
            f"Order {spec.n} exceeds the elimination oracle bound {oracle_bound}"
        )
    log.debug("Bareiss elimination on %dx%d circulant", spec.n, spec.n)
    return bareiss_determinant(spec.matrix())
