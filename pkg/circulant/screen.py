"""
Vectorized singularity screening.

For each divisor d of n the map a -> (f mod Phi_d) is linear in the
coefficient vector a, so it is stored as an integer matrix whose row j is
the residue of x^j. Residues of a whole batch of 0/1 rows are then one
matrix product.
"""

from __future__ import annotations

import logging
from typing import Dict, FrozenSet, Iterable, Optional, Sequence

import numpy as np

from cyclo import CyclotomicCache, cyclotomic_residue, divisors
from poly import IntPoly
from utils.errors import OutOfRange

log = logging.getLogger(__name__)

_INT64_HEADROOM = 1 << 62


class ResidueScreen:
    """Per-divisor residue tables for order n."""

    def __init__(
        self,
        n: int,
        cache: Optional[CyclotomicCache] = None,
        only: Optional[Iterable[int]] = None,
    ) -> None:
        self.n = n
        if cache is None:
            cache = CyclotomicCache()
        chosen = divisors(n) if only is None else sorted(set(only))
        for d in chosen:
            if n % d:
                raise ValueError(f"{d} does not divide {n}")
        self.divisors = tuple(chosen)
        self.tables: Dict[int, np.ndarray] = {d: self._table(d, cache) for d in self.divisors}

        # a full unital row sums n table entries; keep that inside int64
        peak = max((int(np.abs(t).max()) for t in self.tables.values() if t.size), default=0)
        if peak * n >= _INT64_HEADROOM:
            raise OutOfRange(f"Residue table entries too large for n={n}")
        log.debug("ResidueScreen(n=%d) built for divisors %s", n, self.divisors)

    def _table(self, d: int, cache: CyclotomicCache) -> np.ndarray:
        residues = [cyclotomic_residue(IntPoly.monomial(j), d, cache) for j in range(self.n)]
        width = max(1, max(len(r.coeffs) for r in residues))
        table = np.zeros((self.n, width), dtype=np.int64)
        for j, r in enumerate(residues):
            table[j, : len(r.coeffs)] = r.coeffs
        return table

    def rows_from_supports(self, supports: np.ndarray) -> np.ndarray:
        """0/1 coefficient rows for a (batch, k) array of support indices."""
        supports = np.asarray(supports, dtype=np.int64)
        rows = np.zeros((supports.shape[0], self.n), dtype=np.int64)
        if supports.size:
            np.put_along_axis(rows, supports, 1, axis=1)
        return rows

    def residues(self, d: int, supports: np.ndarray) -> np.ndarray:
        """Residues mod Phi_d for a (batch, k) array of support indices."""
        return self.row_residues(d, self.rows_from_supports(supports))

    def row_residues(self, d: int, rows: np.ndarray) -> np.ndarray:
        """Residues mod Phi_d for a (batch, n) array of coefficient rows."""
        return np.asarray(rows, dtype=np.int64) @ self.tables[d]

    def divides_mask(self, d: int, supports: np.ndarray) -> np.ndarray:
        return ~self.residues(d, supports).any(axis=1)

    def singular_mask(self, supports: np.ndarray) -> np.ndarray:
        """True for every support whose polynomial some Phi_d divides."""
        return self.row_singular_mask(self.rows_from_supports(supports))

    def row_singular_mask(self, rows: np.ndarray) -> np.ndarray:
        mask = np.zeros(np.shape(rows)[0], dtype=bool)
        for d in self.divisors:
            mask |= ~self.row_residues(d, rows).any(axis=1)
        return mask

    def witnesses(self, support: Sequence[int]) -> FrozenSet[int]:
        idx = np.asarray([list(support)], dtype=np.int64).reshape(1, -1)
        return frozenset(d for d in self.divisors if bool(self.divides_mask(d, idx)[0]))
