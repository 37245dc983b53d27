"""
Dense univariate polynomials over the integers (IntPoly) and rationals (RatPoly).

Coefficient index i holds the coefficient of x^i. Both types are immutable
and always stored in canonical form: the zero polynomial is the empty tuple,
otherwise the last coefficient is nonzero. Rationals are fractions.Fraction,
which keeps every coefficient reduced with a positive denominator.
"""

from __future__ import annotations

import functools
import numbers
import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, List, Optional, Sequence, Tuple, Union

from utils.errors import DivisionByZeroPoly, NotIntegral, NotMonic, OutOfRange


@functools.total_ordering
class _NegativeInfinity:
    """Degree of the zero polynomial: below every integer, no arithmetic."""

    _instance: Optional["_NegativeInfinity"] = None

    def __new__(cls) -> "_NegativeInfinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other: object) -> bool:
        return other is self

    def __lt__(self, other: object) -> bool:
        return other is not self

    def __hash__(self) -> int:
        return hash("NEG_INFINITY")

    def __repr__(self) -> str:
        return "NEG_INFINITY"

    def __reduce__(self):
        return (_NegativeInfinity, ())


NEG_INFINITY = _NegativeInfinity()

Degree = Union[int, _NegativeInfinity]


def _as_int(value: Any) -> int:
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    if isinstance(value, str):
        return int(value)
    raise TypeError(f"Integer coefficient expected, got {value!r}")


def _as_rational(value: Any) -> Fraction:
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"Rational coefficient expected, got {value!r}")


def long_division(
    num: Sequence[Any],
    den: Sequence[Any],
    divide: Optional[Callable[[Any, Any], Any]] = None,
) -> Tuple[List[Any], List[Any]]:
    """
    Schoolbook division of coefficient lists.

    `divide(c, lead)` performs the leading-coefficient step; it is skipped
    when the divisor is monic, which keeps integer division exact.

    Returns:
        (quotient, remainder) as raw coefficient lists (not canonicalized)
    """
    if not den or den[-1] == 0:
        raise DivisionByZeroPoly("Division by the zero polynomial")

    dn = len(den) - 1
    lead = den[-1]
    if lead != 1 and divide is None:
        raise NotMonic(f"Divisor with leading coefficient {lead} is not monic")

    rem = list(num)
    if len(rem) <= dn:
        return [], rem

    quot: List[Any] = [0] * (len(rem) - dn)
    tail = [(j, c) for j, c in enumerate(den[:-1]) if c]
    for i in range(len(rem) - 1, dn - 1, -1):
        c = rem[i]
        if not c:
            continue
        if lead != 1:
            c = divide(c, lead)
        quot[i - dn] = c
        rem[i] = 0
        base = i - dn
        for j, dj in tail:
            rem[base + j] -= c * dj
    return quot, rem[:dn]


_TERM = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?)?(?:(?(coef)\*)(?P<x>x)(?:\^(?P<exp>\d+))?)?$"
)


@dataclass(frozen=True, eq=False, repr=False)
class _DensePoly:
    coeffs: Tuple[Any, ...] = ()

    def __post_init__(self) -> None:
        values = [self._coerce(c) for c in self.coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    @staticmethod
    def _coerce(value: Any) -> Any:
        raise NotImplementedError

    # -------------------------
    # Constructors
    # -------------------------

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def constant(cls, value: Any):
        return cls((value,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: Any = 1):
        if exponent < 0:
            raise OutOfRange(f"Monomial exponent must be >= 0, got {exponent}")
        return cls([0] * exponent + [coefficient])

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]):
        """Sum of x^e over the given exponents (a unital polynomial when distinct)."""
        exps = list(exponents)
        if not exps:
            return cls.zero()
        if min(exps) < 0:
            raise OutOfRange(f"Exponents must be >= 0, got {min(exps)}")
        values = [0] * (max(exps) + 1)
        for e in exps:
            values[e] += 1
        return cls(values)

    @classmethod
    def from_json_coeffs(cls, items: Iterable[str]):
        """Inverse of to_json_coeffs."""
        return cls(Fraction(str(item)) for item in items)

    @classmethod
    def parse(cls, text: str):
        """
        Parse the canonical text form, e.g. "-1 + x^3" or "1/2 + 3*x".

        Raises:
            ValueError: If a term cannot be read
        """
        compact = text.replace(" ", "")
        if compact in ("", "0"):
            return cls.zero()
        if compact[0] not in "+-":
            compact = "+" + compact
        acc: dict = {}
        for sign, body in re.findall(r"([+-])([^+-]+)", compact):
            match = _TERM.match(body)
            if not match or (match.group("coef") is None and match.group("x") is None):
                raise ValueError(f"Invalid polynomial term '{sign}{body}' in '{text}'")
            coef = Fraction(match.group("coef") or "1")
            if sign == "-":
                coef = -coef
            if match.group("x") is None:
                exp = 0
            else:
                exp = int(match.group("exp") or "1")
            acc[exp] = acc.get(exp, 0) + coef
        if sum(len(m) for m in re.findall(r"[+-][^+-]+", compact)) != len(compact):
            raise ValueError(f"Invalid polynomial '{text}'")
        values = [0] * (max(acc) + 1)
        for exp, coef in acc.items():
            values[exp] = coef
        return cls(values)

    # -------------------------
    # Basic properties
    # -------------------------

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def leading(self) -> Any:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, i: int) -> Any:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def support(self) -> Tuple[int, ...]:
        """Exponents carrying a nonzero coefficient."""
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def weight(self) -> Any:
        """Value at x = 1."""
        return sum(self.coeffs)

    def is_bounded(self, d: int) -> bool:
        """True iff every coefficient lies in {0, ..., d}."""
        return all(0 <= c <= d for c in self.coeffs)

    def is_unital(self) -> bool:
        return self.is_bounded(1)

    def __call__(self, x: Any) -> Any:
        acc: Any = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -------------------------
    # Equality / hashing
    # -------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, _DensePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, numbers.Rational):
            return self.coeffs == ((other,) if other != 0 else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -------------------------
    # Arithmetic
    # -------------------------

    def _lift(self, other: Any) -> Optional["_DensePoly"]:
        if isinstance(other, _DensePoly):
            return other
        if isinstance(other, numbers.Integral):
            return IntPoly((other,))
        if isinstance(other, numbers.Rational):
            return RatPoly((other,))
        return None

    def __add__(self, other: Any):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return _result_type(self, o)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-c for c in self.coeffs)

    def __sub__(self, other: Any):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        cls = _result_type(self, o)
        if not self.coeffs or not o.coeffs:
            return cls.zero()
        b_terms = [(j, c) for j, c in enumerate(o.coeffs) if c]
        out: List[Any] = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, ai in enumerate(self.coeffs):
            if not ai:
                continue
            for j, bj in b_terms:
                out[i + j] += ai * bj
        return cls(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise OutOfRange(f"Negative polynomial power {exponent}")
        result = type(self).one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: Any):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        cls = _result_type(self, o)
        if cls is IntPoly:
            quot, rem = long_division(self.coeffs, o.coeffs)
        else:
            num = [_as_rational(c) for c in self.coeffs]
            den = [_as_rational(c) for c in o.coeffs]
            quot, rem = long_division(num, den, operator.truediv)
        return cls(quot), cls(rem)

    def __floordiv__(self, other: Any):
        return divmod(self, other)[0]

    def __mod__(self, other: Any):
        return divmod(self, other)[1]

    def shift(self, k: int):
        """Multiply by x^k."""
        if k < 0:
            raise OutOfRange(f"Shift must be >= 0, got {k}")
        if not self.coeffs:
            return self
        return type(self)([0] * k + list(self.coeffs))

    def reduce_mod_xn_minus_1(self, n: int):
        """Residue modulo x^n - 1: exponent i folds onto i mod n."""
        if n < 1:
            raise OutOfRange(f"n must be >= 1, got {n}")
        if len(self.coeffs) <= n:
            return self
        out: List[Any] = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i % n] += c
        return type(self)(out)

    # -------------------------
    # Text / JSON forms
    # -------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces: List[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"{type(self).__name__}.parse('{self}')"

    def to_json_coeffs(self) -> List[str]:
        """Compact form: decimal coefficient strings, index = exponent."""
        return [str(c) for c in self.coeffs]


@dataclass(frozen=True, eq=False, repr=False)
class IntPoly(_DensePoly):
    """Polynomial with arbitrary-precision integer coefficients."""

    coeffs: Tuple[int, ...] = ()

    _coerce = staticmethod(_as_int)

    def to_rat(self) -> "RatPoly":
        return RatPoly(self.coeffs)


@dataclass(frozen=True, eq=False, repr=False)
class RatPoly(_DensePoly):
    """Polynomial with exact rational coefficients."""

    coeffs: Tuple[Fraction, ...] = ()

    _coerce = staticmethod(_as_rational)

    def to_rat(self) -> "RatPoly":
        return self

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_int(self) -> IntPoly:
        if not self.is_integral():
            raise NotIntegral(f"Polynomial {self} has non-integer coefficients")
        return IntPoly(c.numerator for c in self.coeffs)

    def monic(self) -> "RatPoly":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        return RatPoly(c / lead for c in self.coeffs)


def _result_type(a: _DensePoly, b: _DensePoly) -> type:
    if isinstance(a, RatPoly) or isinstance(b, RatPoly):
        return RatPoly
    return IntPoly
