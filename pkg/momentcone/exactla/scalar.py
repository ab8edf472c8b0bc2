"""
Exact numbers of the field Q(sqrt 2).
"""

import math
import numbers
import re
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Optional, Union

from momentcone.exceptions import ScalarParseError

_ZERO = Fraction(0)

# one signed term: "3", "-1/2", "+2*sqrt2", "sqrt2/2"
_TERM = re.compile(r"([+-]?)(\d+(?:\.\d+)?(?:/\d+)?)?(\*?sqrt2(?:/\d+)?)?")


@total_ordering
class Scalar:
    """The number ``a + b*sqrt(2)`` with rational ``a`` and ``b``.

    Instances are immutable values. Equality and ordering are exact: when
    ``a`` and ``b`` disagree in sign, the sign of the number is decided by
    comparing ``a**2`` with ``2*b**2`` in rational arithmetic.
    """

    __slots__ = ("_a", "_b")

    def __init__(self, a: Union[int, Fraction] = 0, b: Union[int, Fraction] = 0):
        self._a = Fraction(a)
        self._b = Fraction(b)

    @classmethod
    def _make(cls, a: Fraction, b: Fraction) -> "Scalar":
        obj = object.__new__(cls)
        obj._a = a
        obj._b = b
        return obj

    @classmethod
    def coerce(cls, value: Union["Scalar", int, Fraction, str]) -> "Scalar":
        """
        Convert an exact value to a Scalar.

        Args:
            value: A Scalar, an integer, a Fraction or an exact string such as
                ``"3/2"`` or ``"1/2+1/1*sqrt2"``.

        Returns:
            The value as a Scalar.

        Raises:
            ScalarParseError: If the value is a float or a malformed string.
        """
        lifted = _lift(value)
        if lifted is not None:
            return lifted
        if isinstance(value, str):
            return cls.parse(value)
        raise ScalarParseError(
            f"{value!r} is not an exact value; use an integer, a Fraction or a string"
        )

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """
        Parse an exact string.

        Accepted terms are rationals (``"7"``, ``"-3/4"``, ``"0.5"``) and
        multiples of the root (``"sqrt2"``, ``"-2*sqrt2"``, ``"1/3*sqrt2"``,
        ``"sqrt2/2"``, ``"√2"``), joined by ``+`` or ``-``.
        """
        source = text.replace(" ", "").replace("√2", "sqrt2").replace("sqrt(2)", "sqrt2")
        if not source:
            raise ScalarParseError(f"empty scalar string {text!r}")

        a = b = _ZERO
        pos = 0
        while pos < len(source):
            match = _TERM.match(source, pos)
            sign, coefficient, radical = match.groups()
            if (
                match.end() == pos
                or not (coefficient or radical)
                or (pos and not sign)
                or (radical and radical.startswith("*") and not coefficient)
            ):
                raise ScalarParseError(f"cannot parse scalar {text!r}")
            try:
                value = Fraction(coefficient) if coefficient else Fraction(1)
                if radical and "/" in radical:
                    value /= int(radical.split("/", 1)[1])
            except (ValueError, ZeroDivisionError) as exc:
                raise ScalarParseError(f"cannot parse scalar {text!r}") from exc
            if sign == "-":
                value = -value
            if radical:
                b += value
            else:
                a += value
            pos = match.end()
        return cls._make(a, b)

    @property
    def a(self) -> Fraction:
        """Rational part."""
        return self._a

    @property
    def b(self) -> Fraction:
        """Coefficient of sqrt(2)."""
        return self._b

    @property
    def is_rational(self) -> bool:
        return not self._b

    def to_fraction(self) -> Fraction:
        """Return the value as a Fraction; fails for irrational values."""
        if self._b:
            raise ValueError(f"{self} is not rational")
        return self._a

    def conjugate(self) -> "Scalar":
        """Galois conjugate ``a - b*sqrt(2)``."""
        return Scalar._make(self._a, -self._b)

    def norm(self) -> Fraction:
        """Field norm ``a**2 - 2*b**2``."""
        return self._a * self._a - 2 * self._b * self._b

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}."""
        a, b = self._a, self._b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if not sb:
            return sa
        if not sa or sa == sb:
            return sb
        # opposite signs: the larger square wins, never a tie since sqrt(2) is irrational
        return sa if a * a > 2 * b * b else sb

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"

    def __str__(self) -> str:
        if not self._b:
            return str(self._a)
        sign = "+" if self._b > 0 else "-"
        b = abs(self._b)
        return f"{self._a}{sign}{b.numerator}/{b.denominator}*sqrt2"

    def __float__(self) -> float:
        return float(self._a) + float(self._b) * math.sqrt(2)

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    def __hash__(self) -> int:
        if not self._b:
            return hash(self._a)
        return hash((self._a, self._b))

    def __eq__(self, other: object) -> bool:
        o = _lift(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b

    def __lt__(self, other: object) -> bool:
        o = _lift(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __neg__(self) -> "Scalar":
        return Scalar._make(-self._a, -self._b)

    def __pos__(self) -> "Scalar":
        return self

    def __abs__(self) -> "Scalar":
        return -self if self.sign() < 0 else self

    def __add__(self, other: object) -> "Scalar":
        o = _lift(other)
        if o is None:
            return NotImplemented
        if not self._b and not o._b:
            return Scalar._make(self._a + o._a, _ZERO)
        return Scalar._make(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __sub__(self, other: object) -> "Scalar":
        o = _lift(other)
        if o is None:
            return NotImplemented
        if not self._b and not o._b:
            return Scalar._make(self._a - o._a, _ZERO)
        return Scalar._make(self._a - o._a, self._b - o._b)

    def __rsub__(self, other: object) -> "Scalar":
        o = _lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "Scalar":
        o = _lift(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self._a, self._b, o._a, o._b
        if not b and not d:
            return Scalar._make(a * c, _ZERO)
        return Scalar._make(a * c + 2 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Scalar":
        o = _lift(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self._a, self._b, o._a, o._b
        if not d:
            if not c:
                raise ZeroDivisionError("division by zero in Q(sqrt 2)")
            return Scalar._make(a / c, b / c if b else _ZERO)
        norm = c * c - 2 * d * d
        return Scalar._make((a * c - 2 * b * d) / norm, (b * c - a * d) / norm)

    def __rtruediv__(self, other: object) -> "Scalar":
        o = _lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, exponent: int) -> "Scalar":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (ONE / self) ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result


def _lift(value: object) -> Optional[Scalar]:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, Fraction):
        return Scalar._make(value, _ZERO)
    if isinstance(value, numbers.Integral):
        return Scalar._make(Fraction(int(value)), _ZERO)
    return None


ZERO = Scalar(0)
ONE = Scalar(1)
SQRT2 = Scalar(0, 1)

Exact = Union[Scalar, Fraction, int]


def demote(value: Exact) -> Union[Fraction, Scalar]:
    """Return rational values as Fractions, which are cheaper in inner loops."""
    if isinstance(value, Scalar):
        return value._a if not value._b else value
    if isinstance(value, Fraction):
        return value
    return Fraction(int(value))


def all_rational(values: Iterable[Exact]) -> bool:
    """True when no value carries a sqrt(2) component."""
    return all(not isinstance(v, Scalar) or v.is_rational for v in values)


def exact_sign(value: Exact) -> int:
    """Sign of a Scalar, Fraction or int."""
    if isinstance(value, Scalar):
        return value.sign()
    return (value > 0) - (value < 0)
