"""
Singularity decision by cyclotomic divisibility.

C is singular iff f and x^n - 1 share a root, i.e. iff Phi_d divides f for
some d | n. The divisors d for which this happens are the witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Optional

from cyclo import CyclotomicCache, cyclotomic_divisors_of, divisors

from .spec import CirculantSpec


@dataclass(frozen=True)
class SingularityVerdict:
    witnesses: FrozenSet[int]

    @property
    def singular(self) -> bool:
        return bool(self.witnesses)

    def to_dict(self) -> dict:
        return {"singular": self.singular, "witnesses": sorted(self.witnesses)}


def is_singular(spec: CirculantSpec, cache: Optional[CyclotomicCache] = None) -> SingularityVerdict:
    """
    Decide singularity of a circulant matrix.

    Example:
        >>> is_singular(CirculantSpec.from_support(5, range(5))).witnesses
        frozenset({5})
    """
    return SingularityVerdict(witnesses=cyclotomic_divisors_of(spec.row, spec.n, cache))


def recurrence_divisors(spec: CirculantSpec) -> FrozenSet[int]:
    """Proper divisors r of n for which the first row is constant on classes mod r."""
    a = spec.coefficients()
    found = set()
    for r in divisors(spec.n)[:-1]:
        if all(a[j] == a[j % r] for j in range(r, spec.n)):
            found.add(r)
    return frozenset(found)
