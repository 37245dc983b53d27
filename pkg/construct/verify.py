"""Exhaustive check that prime-power and two-prime orders admit no singular matrix."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from census.exhaustive import exhaustive_census
from models.registry import OrderKind
from utils.errors import OutOfRange
from utils.settings import DEFAULT_EXHAUSTIVE_LIMIT

from .order_class import classify

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class NonsingularityCheck:
    n: int
    k: int
    universe: int
    singular: int

    @property
    def holds(self) -> bool:
        return self.singular == 0


def verify_guaranteed_nonsingular(
    k: int,
    workers: int = 1,
    limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
) -> NonsingularityCheck:
    """
    Count singular weight-k unital circulants of order 2k+1 over all C(2k+1, k) supports.

    Raises:
        OutOfRange: If 2k+1 is composite (singular matrices exist there)
    """
    order = classify(k)
    if order.kind == OrderKind.COMPOSITE:
        raise OutOfRange(f"n={order.n} is composite; nothing is guaranteed nonsingular")
    result = exhaustive_census(order.n, k, workers=workers, limit=limit)
    log.info("n=%d k=%d: %d singular of %d", order.n, k, result.singular, result.universe)
    return NonsingularityCheck(n=order.n, k=k, universe=result.universe, singular=result.singular)
