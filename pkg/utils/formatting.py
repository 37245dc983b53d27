"""
Presentation helpers for exact values.

Counts and probabilities stay exact (int, Fraction) everywhere else; they are
turned into decimal text only here.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction


def format_fraction(value: Fraction) -> str:
    """
    Render a fraction as "num/den" (or just "num" when integral).

    Example:
        >>> format_fraction(Fraction(3, 4))
        '3/4'
    """
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_scientific(value: Fraction, significant: int) -> str:
    """
    Round an exact rational to `significant` figures in scientific notation.

    Rounding is done in decimal arithmetic with exactly `significant` digits
    of precision, so no binary floating point is involved.

    Example:
        >>> format_scientific(Fraction(88181865, 4116715363800), 3)
        '2.14e-5'
        >>> format_scientific(Fraction(88181865, 4116715363800), 4)
        '2.142e-5'
    """
    if significant < 1:
        raise ValueError(f"significant must be >= 1, got {significant}")
    if value == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = significant
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
        return format(quotient, f".{significant - 1}e")


def format_times_ten(value: Fraction, significant: int) -> str:
    """
    Human-readable variant of format_scientific, e.g. "2.14×10^-5".
    """
    text = format_scientific(value, significant)
    if "e" not in text:
        return text
    mantissa, exponent = text.split("e")
    return f"{mantissa}×10^{int(exponent)}"
