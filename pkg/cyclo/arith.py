"""
Integer arithmetic helpers: divisors, trial-division factorization,
Euler's totient and small linear weight equations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from utils.errors import OutOfRange


def divisors(n: int) -> List[int]:
    """
    All divisors of n in increasing order.

    Example:
        >>> divisors(45)
        [1, 3, 5, 9, 15, 45]
    """
    if n < 1:
        raise OutOfRange(f"divisors() needs n >= 1, got {n}")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


@dataclass(frozen=True)
class FactoredOrder:
    """Prime-power factorization of n, primes ascending."""

    n: int
    prime_powers: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        product = 1
        for p, e in self.prime_powers:
            if e < 1:
                raise OutOfRange(f"Exponent of {p} must be >= 1, got {e}")
            product *= p ** e
        if product != self.n:
            raise OutOfRange(f"Factorization {self.prime_powers} does not multiply to {self.n}")

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.prime_powers)

    @property
    def num_primes(self) -> int:
        return len(self.prime_powers)

    def exponent(self, p: int) -> int:
        for prime, e in self.prime_powers:
            if prime == p:
                return e
        return 0


def factorize(n: int) -> FactoredOrder:
    """
    Trial-division factorization.

    Raises:
        OutOfRange: If n < 2

    Example:
        >>> factorize(45).prime_powers
        ((3, 2), (5, 1))
    """
    if n < 2:
        raise OutOfRange(f"factorize() needs n >= 2, got {n}")
    powers = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            powers.append((p, e))
        p += 1 if p == 2 else 2
    if rest > 1:
        powers.append((rest, 1))
    return FactoredOrder(n=n, prime_powers=tuple(powers))


def totient(n: int) -> int:
    """Euler's phi, from the factorization (phi(1) = 1)."""
    if n < 1:
        raise OutOfRange(f"totient() needs n >= 1, got {n}")
    if n == 1:
        return 1
    result = n
    for p in factorize(n).primes:
        result = result // p * (p - 1)
    return result


def weight_splits(total: int, weights: Sequence[int]) -> List[Tuple[int, ...]]:
    """
    All nonnegative integer vectors x with sum(w * x) == total.

    Used to list the possible h(1) values when f(1) is a combination of
    G(1) values. Results are in lexicographic order.

    Example:
        >>> weight_splits(16, [7, 5, 3])
        [(0, 2, 2), (1, 0, 3)]
        >>> weight_splits(4, [3, 5])
        []
    """
    if total < 0:
        return []
    if any(w < 1 for w in weights):
        raise OutOfRange(f"Weights must be positive, got {list(weights)}")

    out: List[Tuple[int, ...]] = []

    def walk(i: int, remaining: int, prefix: Tuple[int, ...]) -> None:
        if i == len(weights):
            if remaining == 0:
                out.append(prefix)
            return
        for x in range(remaining // weights[i] + 1):
            walk(i + 1, remaining - x * weights[i], prefix + (x,))

    walk(0, total, ())
    return out
