"""Utility modules for circulantlab."""

from .errors import (
    CirculantLabError,
    DivisionByZeroPoly,
    NotDivisible,
    NotMonic,
    NotIntegral,
    AllZero,
    NotProperDivisor,
    OutOfRange,
    IndexOutOfRange,
    OracleBoundExceeded,
    NotDivisibleByPhiN,
    DegreeTooLarge,
    NotTwoPrimeOrder,
    CoefficientsOutOfRange,
    NotSameF,
    NoDeltaExists,
    NoSingularGuarantee,
    ConstructionError,
    UnsupportedCensus,
)
from .formatting import format_fraction, format_scientific, format_times_ten
from .parsing import (
    parse_int,
    parse_positive_int,
    parse_nonnegative_int,
    parse_support,
    format_support,
    validate_support,
)
from .settings import Settings

__all__ = [
    "CirculantLabError",
    "DivisionByZeroPoly",
    "NotDivisible",
    "NotMonic",
    "NotIntegral",
    "AllZero",
    "NotProperDivisor",
    "OutOfRange",
    "IndexOutOfRange",
    "OracleBoundExceeded",
    "NotDivisibleByPhiN",
    "DegreeTooLarge",
    "NotTwoPrimeOrder",
    "CoefficientsOutOfRange",
    "NotSameF",
    "NoDeltaExists",
    "NoSingularGuarantee",
    "ConstructionError",
    "UnsupportedCensus",
    "format_fraction",
    "format_scientific",
    "format_times_ten",
    "parse_int",
    "parse_positive_int",
    "parse_nonnegative_int",
    "parse_support",
    "format_support",
    "validate_support",
    "Settings",
]
