"""
Domain error hierarchy for circulantlab.

Every error raised by the library for a bad input or an impossible request
derives from CirculantLabError, which is itself a ValueError so callers that
only know about ValueError keep working. The CLI maps these to exit code 2.
"""

from __future__ import annotations


class CirculantLabError(ValueError):
    """Base class for all domain errors."""


# poly

class DivisionByZeroPoly(CirculantLabError, ZeroDivisionError):
    """Division by the zero polynomial."""


class NotDivisible(CirculantLabError):
    """Exact division left a nonzero remainder."""


class NotMonic(CirculantLabError):
    """An integer division was requested by a non-monic divisor."""


class NotIntegral(CirculantLabError):
    """A rational polynomial was expected to have integer coefficients."""


class AllZero(CirculantLabError):
    """Every input to a gcd computation was the zero polynomial."""


# cyclo

class NotProperDivisor(CirculantLabError):
    """r must divide n and be strictly smaller than n."""


class OutOfRange(CirculantLabError):
    """A numeric argument is outside the supported range."""


# circulant

class IndexOutOfRange(CirculantLabError):
    """A support element is not in [0, n)."""


class OracleBoundExceeded(CirculantLabError):
    """The materialized determinant oracle was asked for too large an order."""


# decomp

class NotDivisibleByPhiN(CirculantLabError):
    """The polynomial to decompose is not divisible by the n-th cyclotomic polynomial."""


class DegreeTooLarge(CirculantLabError):
    """A polynomial or multiplier exceeds its degree bound."""


class NotTwoPrimeOrder(CirculantLabError):
    """The operation needs n with exactly two distinct prime factors."""


class CoefficientsOutOfRange(CirculantLabError):
    """Coefficients are outside {0, ..., d}."""


class NotSameF(CirculantLabError):
    """Two decompositions do not reconstruct the same polynomial."""


class NoDeltaExists(CirculantLabError):
    """No shift polynomial relates the two decompositions."""


# construct

class NoSingularGuarantee(CirculantLabError):
    """2k+1 is a prime power or a product of two primes: every such matrix is nonsingular."""


class ConstructionError(CirculantLabError):
    """An internal consistency check of the singular-matrix constructor failed."""


# census

class UnsupportedCensus(CirculantLabError):
    """The requested census is outside what the counting engines support."""
