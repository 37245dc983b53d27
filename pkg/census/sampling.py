"""
Monte-Carlo estimate of the singular fraction.

Supports are drawn as the first k entries of independent uniform
permutations of {0, ..., n-1}, screened in vectorized batches.
"""

from __future__ import annotations

import logging
from typing import Optional, Tuple

import numpy as np

from circulant import ResidueScreen
from cyclo import CyclotomicCache
from utils.errors import OutOfRange
from utils.settings import DEFAULT_CHUNK_SIZE

log = logging.getLogger(__name__)


def sample_supports(rng: np.random.Generator, n: int, k: int, size: int) -> np.ndarray:
    """(size, k) array of uniform k-subsets of range(n)."""
    base = np.tile(np.arange(n, dtype=np.int64), (size, 1))
    return rng.permuted(base, axis=1)[:, :k]


def sample_singularity(
    n: int,
    k: int,
    trials: int,
    seed: int,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    cache: Optional[CyclotomicCache] = None,
) -> Tuple[int, int]:
    """
    Count singular specs among `trials` random weight-k unital rows.

    The result depends only on (n, k, trials, seed, chunk_size).

    Returns:
        (hits, trials)
    """
    if n < 1 or not 0 <= k <= n:
        raise OutOfRange(f"Need n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    if trials < 1:
        raise OutOfRange(f"trials must be >= 1, got {trials}")

    rng = np.random.default_rng(seed)
    screen = ResidueScreen(n, cache)
    hits = 0
    remaining = trials
    while remaining:
        size = min(chunk_size, remaining)
        supports = sample_supports(rng, n, k, size)
        batch_hits = int(screen.singular_mask(supports).sum())
        hits += batch_hits
        remaining -= size
        log.debug("sampled %d supports, %d singular", size, batch_hits)

    log.info("sample_singularity(n=%d, k=%d): %d / %d singular", n, k, hits, trials)
    return hits, trials
