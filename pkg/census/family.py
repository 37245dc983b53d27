"""
Enumeration of p-uniformized bounded decompositions.

For an order d with two primes p < q and m = d/(p*q), a residue vector
a in {0..bound}^d divisible by Phi_d is the reconstruction of exactly one
pair (b, c) = (h_{d/p}, h_{d/q}) with
  - min B_s = 0 for every s < m,
  - max B_s + max C_s <= bound for every s < m,
  - p * sum(b) + q * sum(c) = weight,
and a_j = b_{j mod d/p} + c_{j mod d/q}. Listing the pairs therefore lists
the residue vectors without scanning {0..bound}^d.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import Iterator, List, Tuple

from cyclo import weight_splits

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class UniformizedMember:
    """One (b, c) pair, its residue vector and how many unital lifts it has."""

    b: Tuple[int, ...]
    c: Tuple[int, ...]
    residue: Tuple[int, ...]
    lifts: int


def bounded_vectors(length: int, bound: int, total: int) -> Iterator[Tuple[int, ...]]:
    """
    Vectors in {0..bound}^length with the given sum, in lexicographic order.

    Example:
        >>> list(bounded_vectors(2, 1, 1))
        [(0, 1), (1, 0)]
    """
    if length == 0:
        if total == 0:
            yield ()
        return
    if total < 0 or total > length * bound:
        return
    for head in range(min(bound, total) + 1):
        for tail in bounded_vectors(length - 1, bound, total - head):
            yield (head,) + tail


def _group_extrema(vec: Tuple[int, ...], m: int) -> Tuple[List[int], List[int]]:
    lows = [min(vec[s::m]) for s in range(m)]
    highs = [max(vec[s::m]) for s in range(m)]
    return lows, highs


def residue_lifts(residue: Tuple[int, ...], n: int) -> int:
    """Unital polynomials of degree < n whose residue mod x^d - 1 is `residue`."""
    d = len(residue)
    if n % d:
        raise ValueError(f"Residue length {d} does not divide {n}")
    fibre = n // d
    out = 1
    for a in residue:
        out *= comb(fibre, a)
    return out


def uniformized_family(
    d: int,
    p: int,
    q: int,
    bound: int,
    weight: int,
    n: int = 0,
) -> List[UniformizedMember]:
    """
    All p-uniformized (b, c) pairs for order d under the three conditions.

    Args:
        d: Order of the residue ring, d = p^a q^b
        p: Smaller prime of d
        q: Larger prime of d
        bound: Coefficient bound of the residue vectors
        weight: Required value of the residue vector at 1
        n: Order of the lifted polynomials (lifts are counted for n, default d)

    Returns:
        Members in lexicographic (b, c) order
    """
    if d % (p * q):
        raise ValueError(f"{p}*{q} does not divide {d}")
    n = n or d
    m = d // (p * q)
    nb, nc = d // p, d // q

    members: List[UniformizedMember] = []
    for sum_b, sum_c in weight_splits(weight, [p, q]):
        bs = []
        for b in bounded_vectors(nb, bound, sum_b):
            lows, highs = _group_extrema(b, m)
            if all(low == 0 for low in lows):
                bs.append((b, highs))
        if not bs:
            continue
        cs = []
        for c in bounded_vectors(nc, bound, sum_c):
            cs.append((c, _group_extrema(c, m)[1]))
        for b, b_highs in bs:
            for c, c_highs in cs:
                if any(bh + ch > bound for bh, ch in zip(b_highs, c_highs)):
                    continue
                residue = tuple(b[j % nb] + c[j % nc] for j in range(d))
                members.append(
                    UniformizedMember(b=b, c=c, residue=residue, lifts=residue_lifts(residue, n))
                )

    log.debug(
        "uniformized_family(d=%d, p=%d, q=%d, bound=%d, weight=%d): %d members",
        d, p, q, bound, weight, len(members),
    )
    return members
