"""
Circulant matrix model.

A circulant matrix C(a_0, ..., a_{n-1}) is stored as its order n and the
associated polynomial f(x) = a_0 + a_1 x + ... + a_{n-1} x^{n-1}. Row i is
row 0 rotated right by i, so entry (i, j) is a_{(j - i) mod n}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from poly import IntPoly
from utils.errors import DegreeTooLarge, IndexOutOfRange, OutOfRange


@dataclass(frozen=True)
class CirculantSpec:
    """
    Order n plus first-row polynomial (deg row < n).

    Unital specs (every coefficient 0 or 1) are interchangeable with their
    support set; see from_support / support.
    """

    n: int
    row: IntPoly

    def __post_init__(self) -> None:
        if self.n < 1:
            raise OutOfRange(f"Circulant order must be >= 1, got {self.n}")
        if len(self.row.coeffs) > self.n:
            raise DegreeTooLarge(
                f"Row polynomial of degree {self.row.degree} does not fit order {self.n}"
            )

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "CirculantSpec":
        """
        Unital spec with a_j = 1 exactly for j in support.

        Raises:
            IndexOutOfRange: If an element is outside [0, n)
        """
        if n < 1:
            raise OutOfRange(f"Circulant order must be >= 1, got {n}")
        exps = sorted(set(support))
        for e in exps:
            if not 0 <= e < n:
                raise IndexOutOfRange(f"Support element {e} is outside [0, {n})")
        return cls(n=n, row=IntPoly.from_exponents(exps))

    @classmethod
    def from_row(cls, n: int, coefficients: Sequence[int]) -> "CirculantSpec":
        """Spec from an explicit first row a_0, ..., a_{len-1} (len <= n)."""
        if len(coefficients) > n:
            raise IndexOutOfRange(f"Row of length {len(coefficients)} exceeds order {n}")
        return cls(n=n, row=IntPoly(coefficients))

    @property
    def support(self) -> Tuple[int, ...]:
        return self.row.support()

    @property
    def weight(self) -> int:
        return self.row.weight()

    @property
    def is_unital(self) -> bool:
        return self.row.is_unital()

    def coefficients(self) -> List[int]:
        """a_0, ..., a_{n-1}, zero padded."""
        return [self.row.coefficient(j) for j in range(self.n)]

    def matrix(self) -> List[List[int]]:
        """Materialized n x n matrix."""
        a = self.coefficients()
        n = self.n
        return [[a[(j - i) % n] for j in range(n)] for i in range(n)]
