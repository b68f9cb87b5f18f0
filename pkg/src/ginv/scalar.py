"""Exact Gaussian-rational scalars.

Rationals are ``gmpy2.mpq`` when gmpy2 is importable and
:class:`fractions.Fraction` otherwise.  Both keep numerator and denominator
reduced with a positive denominator after every operation, compare equal to
each other and hash alike.  :class:`GaussianRational` pairs two of them as
``re + im*i``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover
    Rational = Fraction

__all__ = [
    "DivisionByZero",
    "Rational",
    "GaussianRational",
    "ZERO",
    "ONE",
    "I",
    "as_gaussian",
    "parse_rational",
    "format_rational",
]


class DivisionByZero(ZeroDivisionError):
    """Raised on division by an exact zero."""


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str):
    """Parse ``"p/q"`` or ``"p"`` into a canonical rational.

    Only integer numerators and positive integer denominators are accepted;
    decimal or exponent notation is rejected so that no value can silently
    pass through a float.
    """
    if not isinstance(text, str):
        raise ValueError(f"rational must be a string, got {type(text).__name__}")
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"malformed rational {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Rational(num, den)


def format_rational(q) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


Scalar = Union["GaussianRational", Fraction, int]


class GaussianRational:
    """An element of Q(i), immutable and always canonical."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _to_rational(re))
        object.__setattr__(self, "im", _to_rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _raw(cls, re, im) -> "GaussianRational":
        # Skip coercion in hot loops; both parts are already Rationals.
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    @classmethod
    def parse(cls, re: str, im: str = "0") -> "GaussianRational":
        return cls._raw(parse_rational(re), parse_rational(im))

    def to_json(self) -> dict:
        return {"re": format_rational(self.re), "im": format_rational(self.im)}

    # --- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    # --- arithmetic -------------------------------------------------------

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def norm(self):
        """``conj(z) * z`` as a rational."""
        return self.re * self.re + self.im * self.im

    def __neg__(self) -> "GaussianRational":
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self) -> "GaussianRational":
        return self

    def __add__(self, other: Scalar) -> "GaussianRational":
        other = as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "GaussianRational":
        other = as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: Scalar) -> "GaussianRational":
        other = as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other: Scalar) -> "GaussianRational":
        other = as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational._raw(a * c, b)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if not n:
            raise DivisionByZero("division by zero Gaussian rational")
        return GaussianRational._raw(self.re / n, -self.im / n)

    def __truediv__(self, other: Scalar) -> "GaussianRational":
        other = as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "GaussianRational":
        other = as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "GaussianRational":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = ONE
        for _ in range(abs(exponent)):
            result = result * base
        return result

    # --- comparison / hashing --------------------------------------------

    def __eq__(self, other: object) -> bool:
        other = as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({str(self)!r})"

    def __str__(self) -> str:
        re_s, im_s = format_rational(self.re), format_rational(self.im)
        if not self.im:
            return re_s
        if not self.re:
            return f"{im_s}i"
        sign = "-" if self.im < 0 else "+"
        return f"{re_s}{sign}{format_rational(abs(self.im))}i"


def as_gaussian(value) -> GaussianRational:
    """Coerce int/Fraction/GaussianRational; NotImplemented for anything else."""
    if type(value) is GaussianRational:
        return value
    if isinstance(value, (int, Fraction)) or type(value) is Rational:
        return GaussianRational._raw(_to_rational(value), _R0)
    if isinstance(value, complex):
        raise TypeError("complex floats are not exact; build a GaussianRational")
    return NotImplemented


def _to_rational(value):
    if type(value) is Rational:
        return value
    if isinstance(value, bool):
        return Rational(int(value))
    if isinstance(value, int):
        return Rational(value)
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


_R0 = Rational(0)
ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
