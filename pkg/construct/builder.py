"""
Explicit singular weight-k unital circulants for composite n = 2k+1.

With n = p*q*r (p < q the two smallest primes) write k = a*p + b*q with
1 <= b <= p-1. Then

    f = (1 + x^r + ... + x^{(b-1)r}) * G(n, p*r) + sum_{j in R_a} x^j * G(n, q*r)

is unital of weight b*q + a*p = k whenever R_a is a set of a exponents in
[0, q*r) avoiding multiples of r, and Phi_n divides both G terms.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from circulant import CirculantSpec
from cyclo import CyclotomicCache, divides_cyclotomic, fundamental_recurrent
from models.registry import get_order_metadata
from poly import IntPoly
from utils.errors import ConstructionError, NoSingularGuarantee

from .order_class import OrderClass, classify

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Construction:
    k: int
    order: OrderClass
    a: int
    b: int
    r_a: Tuple[int, ...]
    spec: CirculantSpec

    @property
    def n(self) -> int:
        return self.order.n

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.order.n,
            "p": self.order.p,
            "q": self.order.q,
            "r": self.order.r,
            "a": self.a,
            "b": self.b,
            "R_a": list(self.r_a),
            "support": list(self.spec.support),
            "singular": True,
        }


def solve_ab(k: int, p: int, q: int) -> Tuple[int, int]:
    """
    The unique (a, b) with a*p + b*q = k, a >= 1 and 1 <= b <= p-1.

    Raises:
        ConstructionError: If there is no solution or more than one
    """
    solutions = [
        ((k - b * q) // p, b)
        for b in range(1, p)
        if k - b * q >= p and (k - b * q) % p == 0
    ]
    if len(solutions) != 1:
        raise ConstructionError(f"Expected one (a, b) for k={k}, p={p}, q={q}, found {solutions}")
    return solutions[0]


def eligible_exponents(q: int, r: int) -> List[int]:
    """{0, ..., q*r - 1} minus the multiples of r."""
    return [j for j in range(q * r) if j % r]


def _composite_or_raise(k: int) -> OrderClass:
    order = classify(k)
    if not order.singular_possible:
        meta = get_order_metadata(order.kind)
        raise NoSingularGuarantee(f"n={order.n} is a {meta.display_name.lower()}: {meta.guarantee}")
    return order


def feasibility_margin(k: int) -> int:
    """q*r - q - a: eligible exponents left over after choosing R_a."""
    order = _composite_or_raise(k)
    a, _ = solve_ab(k, order.p, order.q)
    return order.q * order.r - order.q - a


def construct_singular(
    k: int,
    seed: Optional[int] = None,
    cache: Optional[CyclotomicCache] = None,
) -> Construction:
    """
    Build a singular weight-k unital circulant matrix of order 2k+1.

    Args:
        k: Weight, 2k+1 composite with r >= 3
        seed: When given, R_a is a seeded random choice instead of the a
            smallest eligible exponents

    Raises:
        NoSingularGuarantee: If 2k+1 is a prime power or a product of two primes
    """
    order = _composite_or_raise(k)
    p, q, r, n = order.p, order.q, order.r, order.n
    a, b = solve_ab(k, p, q)

    eligible = eligible_exponents(q, r)
    if a > len(eligible):
        raise ConstructionError(f"Need {a} eligible exponents, only {len(eligible)} exist")
    if seed is None:
        r_a = tuple(eligible[:a])
    else:
        rng = np.random.default_rng(seed)
        r_a = tuple(sorted(int(j) for j in rng.choice(eligible, size=a, replace=False)))

    f = (
        IntPoly.from_exponents(range(0, b * r, r)) * fundamental_recurrent(n, p * r)
        + IntPoly.from_exponents(r_a) * fundamental_recurrent(n, q * r)
    )
    if not f.is_unital() or f.weight() != k or not divides_cyclotomic(f, n, cache):
        raise ConstructionError(f"Construction for k={k} failed its checks")

    log.debug("construct_singular(k=%d): a=%d b=%d R_a=%s", k, a, b, r_a)
    return Construction(k=k, order=order, a=a, b=b, r_a=r_a, spec=CirculantSpec(n=n, row=f))
