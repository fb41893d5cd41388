"""Exact scalar arithmetic over the supported coefficient fields.

Rational scalars are gmpy2.mpq when available (much faster) and
fractions.Fraction otherwise; prime-field scalars are plain ints in
``[0, p)``.  Nothing in this package ever touches a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

try:
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover
    _rational = Fraction

from .errors import ConfigError, ParseError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: rationals (characteristic 0) or a prime field F_p."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ConfigError(f"field characteristic must be 0 or prime, got {c}")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def zero(self):
        return _rational(0) if self.is_rational else 0

    @property
    def one(self):
        return _rational(1) if self.is_rational else 1

    def coerce(self, value):
        """Convert an int / rational / literal string into a field scalar."""
        if isinstance(value, str):
            return self.parse_scalar(value)
        if isinstance(value, float):
            raise ConfigError(f"floating-point coefficient {value!r} rejected; use exact literals")
        if self.is_rational:
            return _rational(value)
        p = self.characteristic
        if not isinstance(value, int):
            num, den = value.numerator, value.denominator
            den %= p
            if den == 0:
                raise ConfigError(f"denominator of {value} is divisible by {p}")
            return (num * pow(den, p - 2, p)) % p
        return value % p

    def add(self, a, b):
        return a + b if self.is_rational else (a + b) % self.characteristic

    def sub(self, a, b):
        return a - b if self.is_rational else (a - b) % self.characteristic

    def mul(self, a, b):
        return a * b if self.is_rational else (a * b) % self.characteristic

    def neg(self, a):
        return -a if self.is_rational else (-a) % self.characteristic

    def inv(self, a):
        if self.is_rational:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return self.one / a
        p = self.characteristic
        a %= p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, p - 2, p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def parse_scalar(self, text: str):
        """Parse ``"a/b"`` or an integer literal into an exact scalar."""
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/", 1)
                value = Fraction(int(num), int(den))
            else:
                value = Fraction(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad scalar literal {text!r}: {exc}") from exc
        return self.coerce(value)

    def format_scalar(self, value) -> str:
        return str(value)

    def __str__(self) -> str:
        return "Q" if self.is_rational else f"F{self.characteristic}"


RATIONALS = FieldSpec(0)


def prime_field(p: int) -> FieldSpec:
    return FieldSpec(p)
