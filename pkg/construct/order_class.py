"""Classification of n = 2k+1 into prime power, two primes, or composite."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional

from cyclo import factorize
from models.registry import OrderKind, get_order_metadata
from utils.errors import OutOfRange


@dataclass(frozen=True)
class OrderClass:
    """
    Shape of n = 2k+1.

    PRIME_POWER sets p and e; TWO_PRIMES sets p < q; COMPOSITE sets the two
    smallest primes p < q and r = n/(p*q) >= 3 (so p <= r).
    """

    k: int
    n: int
    kind: OrderKind
    p: int
    q: Optional[int] = None
    r: Optional[int] = None
    e: Optional[int] = None

    @property
    def singular_possible(self) -> bool:
        return get_order_metadata(self.kind).singular_possible

    def to_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {"k": self.k, "n": self.n, "kind": self.kind.value, "p": self.p}
        for name in ("q", "r", "e"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        return out


def classify(k: int) -> OrderClass:
    """
    Example:
        >>> classify(22).kind, classify(22).r
        (<OrderKind.COMPOSITE: 'composite'>, 3)
    """
    if k < 1:
        raise OutOfRange(f"k must be >= 1, got {k}")
    n = 2 * k + 1
    factored = factorize(n)
    if factored.num_primes == 1:
        p, e = factored.prime_powers[0]
        return OrderClass(k=k, n=n, kind=OrderKind.PRIME_POWER, p=p, e=e)

    p, q = factored.primes[:2]
    r = n // (p * q)
    if r == 1:
        return OrderClass(k=k, n=n, kind=OrderKind.TWO_PRIMES, p=p, q=q)
    return OrderClass(k=k, n=n, kind=OrderKind.COMPOSITE, p=p, q=q, r=r)
