"""
Exact census of singular weight-k unital circulants of any order n.

For a set S of divisors of n, N(S) counts supports whose polynomial is
divisible by Phi_d for every d in S. Residues are linear, so splitting the
positions into a low half L and a high half H, a support A + B (A in L,
B in H, |A| = i) qualifies iff r_S(A) = -r_S(B). Both sides are listed per
split size i and joined by counting equal residue rows. The singular count
is then sum over nonempty S of (-1)^(|S|+1) N(S); supersets of a set with
N(S) = 0 are skipped.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import chain, combinations
from math import comb
from multiprocessing import Pool
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from circulant import ResidueScreen
from cyclo import CyclotomicCache, divisors
from utils.errors import OutOfRange
from utils.settings import DEFAULT_EXHAUSTIVE_LIMIT

log = logging.getLogger(__name__)

_INT16_LIMIT = 1 << 15


@dataclass(frozen=True)
class ExhaustiveCensus:
    n: int
    k: int
    singular: int
    per_divisor: Dict[int, int]
    intersections: Dict[Tuple[int, ...], int] = field(default_factory=dict)

    @property
    def universe(self) -> int:
        return comb(self.n, self.k)


def _indicator(positions: int, size: int) -> np.ndarray:
    """0/1 rows for every `size`-subset of range(positions), lexicographic."""
    count = comb(positions, size)
    rows = np.zeros((count, positions), dtype=np.int16)
    if size == 0 or count == 0:
        return rows
    idx = np.fromiter(
        chain.from_iterable(combinations(range(positions), size)),
        dtype=np.int64,
        count=count * size,
    ).reshape(count, size)
    np.put_along_axis(rows, idx, 1, axis=1)
    return rows


def _match_count(low: np.ndarray, high: np.ndarray) -> int:
    """Pairs (x, y) of rows with low[x] + high[y] == 0."""
    if low.shape[0] == 0 or high.shape[0] == 0:
        return 0
    low_keys, low_counts = np.unique(low, axis=0, return_counts=True)
    high_keys, high_counts = np.unique(-high, axis=0, return_counts=True)

    stacked = np.concatenate([low_keys, high_keys])
    _, inverse = np.unique(stacked, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    low_ids, high_ids = inverse[: len(low_keys)], inverse[len(low_keys):]

    slot = np.full(int(inverse.max()) + 1, -1, dtype=np.int64)
    slot[high_ids] = np.arange(len(high_keys))
    partner = slot[low_ids]
    hit = partner >= 0
    return int(np.dot(low_counts[hit].astype(np.int64), high_counts[partner[hit]].astype(np.int64)))


def _split_counts(args: Tuple[int, int, int, int, Dict[Tuple[int, ...], np.ndarray]]) -> Dict[Tuple[int, ...], int]:
    n, k, h, i, tables = args
    low_rows = _indicator(h, i)
    high_rows = _indicator(n - h, k - i)
    out = {}
    for subset, table in tables.items():
        low = low_rows @ table[:h]
        high = high_rows @ table[h:]
        out[subset] = _match_count(low, high)
    return out


def _subset_tables(screen: ResidueScreen, subsets: Sequence[Tuple[int, ...]]) -> Dict[Tuple[int, ...], np.ndarray]:
    tables = {}
    for subset in subsets:
        table = np.concatenate([screen.tables[d] for d in subset], axis=1)
        peak = int(np.abs(table).max()) if table.size else 0
        if peak * screen.n >= _INT16_LIMIT:
            raise OutOfRange(f"Residue entries too large for n={screen.n}")
        tables[subset] = table.astype(np.int16)
    return tables


def _count_subsets(
    n: int,
    k: int,
    subsets: Sequence[Tuple[int, ...]],
    screen: ResidueScreen,
    workers: int,
) -> Dict[Tuple[int, ...], int]:
    h = n // 2
    tables = _subset_tables(screen, subsets)
    splits = [i for i in range(0, min(h, k) + 1) if k - i <= n - h]
    jobs = [(n, k, h, i, tables) for i in splits]
    if workers > 1:
        with Pool(workers) as pool:
            results = pool.map(_split_counts, jobs)
    else:
        results = [_split_counts(job) for job in jobs]

    totals = {subset: 0 for subset in subsets}
    for result in results:
        for subset, count in result.items():
            totals[subset] += count
    return totals


def exhaustive_census(
    n: int,
    k: int,
    workers: int = 1,
    limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
    cache: Optional[CyclotomicCache] = None,
) -> ExhaustiveCensus:
    """
    Count every singular weight-k unital circulant matrix of order n.

    Raises:
        OutOfRange: If n exceeds `limit` or k is outside [0, n]
    """
    if n < 1 or n > limit:
        raise OutOfRange(f"Exhaustive census supports 1 <= n <= {limit}, got {n}")
    if not 0 <= k <= n:
        raise OutOfRange(f"k must be in [0, {n}], got {k}")

    screen = ResidueScreen(n, cache)
    divs = divisors(n)
    counts: Dict[Tuple[int, ...], int] = {}
    zero_sets: List[frozenset] = []

    for size in range(1, len(divs) + 1):
        level = [
            subset
            for subset in combinations(divs, size)
            if not any(z <= frozenset(subset) for z in zero_sets)
        ]
        if not level:
            break
        log.info("exhaustive_census(n=%d, k=%d): %d divisor sets of size %d", n, k, len(level), size)
        level_counts = _count_subsets(n, k, level, screen, workers)
        for subset, count in level_counts.items():
            counts[subset] = count
            if count == 0:
                zero_sets.append(frozenset(subset))

    singular = sum((-1) ** (len(s) + 1) * c for s, c in counts.items())
    per_divisor = {d: counts.get((d,), 0) for d in divs}
    log.info("exhaustive_census(n=%d, k=%d): %d singular of %d", n, k, singular, comb(n, k))
    return ExhaustiveCensus(
        n=n,
        k=k,
        singular=singular,
        per_divisor=per_divisor,
        intersections={s: c for s, c in counts.items() if len(s) > 1},
    )
