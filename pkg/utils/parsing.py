"""
Utilities for parsing and formatting command-line values.

Support sets are exchanged as comma-separated exponent lists ("0,9,18");
every numeric argument is parsed as an exact integer.
"""

from __future__ import annotations

from typing import Iterable, Tuple


def parse_int(text: str) -> int:
    """
    Parse an exact decimal integer.

    Args:
        text: Decimal string, optionally signed and padded with whitespace

    Returns:
        The integer value

    Raises:
        ValueError: If the text is not a decimal integer

    Example:
        >>> parse_int(" 45 ")
        45
    """
    stripped = text.strip()
    body = stripped[1:] if stripped[:1] in "+-" else stripped
    if not body.isdigit():
        raise ValueError(f"Invalid integer '{text}'")
    return int(stripped)


def parse_positive_int(text: str) -> int:
    """
    Parse an integer that must be at least 1.

    Example:
        >>> parse_positive_int("22")
        22
    """
    value = parse_int(text)
    if value < 1:
        raise ValueError(f"Expected a positive integer, got {value}")
    return value


def parse_nonnegative_int(text: str) -> int:
    """Parse an integer that must be at least 0."""
    value = parse_int(text)
    if value < 0:
        raise ValueError(f"Expected a nonnegative integer, got {value}")
    return value


def parse_support(text: str) -> Tuple[int, ...]:
    """
    Parse a comma-separated support list into a strictly increasing tuple.

    The empty string (or only whitespace) is the empty support.

    Args:
        text: Comma-separated exponents, e.g. "0,9,18"

    Returns:
        Sorted tuple of distinct exponents

    Raises:
        ValueError: If an element is not an integer or appears twice

    Example:
        >>> parse_support("9, 0,18")
        (0, 9, 18)
        >>> parse_support("1,1")
        Traceback (most recent call last):
        ...
        ValueError: Duplicate exponent 1 in support '1,1'
    """
    if not text.strip():
        return ()

    values = []
    for part in text.split(","):
        if not part.strip():
            raise ValueError(f"Empty element in support '{text}'")
        try:
            values.append(parse_int(part))
        except ValueError as e:
            raise ValueError(f"Invalid support '{text}': {e}") from e

    seen = set()
    for value in values:
        if value in seen:
            raise ValueError(f"Duplicate exponent {value} in support '{text}'")
        seen.add(value)

    return tuple(sorted(values))


def format_support(support: Iterable[int]) -> str:
    """
    Format exponents as the comma-separated list accepted by parse_support.

    Example:
        >>> format_support([18, 0, 9])
        '0,9,18'
    """
    return ",".join(str(e) for e in sorted(support))


def validate_support(text: str) -> bool:
    """
    Check whether a support string parses.

    Example:
        >>> validate_support("0,1,2")
        True
        >>> validate_support("0,x")
        False
    """
    try:
        parse_support(text)
        return True
    except ValueError:
        return False
