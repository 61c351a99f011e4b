"""Exact scalar domains: rationals extended with infinities, and Gaussian rationals.

All geometry and certification in this package is carried out over these
exact types; floats only appear in the numeric oracle.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

_FINITE = 0
_POS = 1
_NEG = -1


@functools.total_ordering
class ExtRational:
    """A rational number extended with +infinity and -infinity.

    Infima over empty segment sets are +inf and degrees of the zero
    polynomial are -inf, so these values flow through all the exponent
    formulas.  The ordering is total and ``min``/``max`` behave as expected.
    """

    __slots__ = ("_sign", "_value")

    def __init__(self, value: Fraction | int = 0, _sign: int = _FINITE):
        self._sign = _sign
        self._value = Fraction(value) if _sign == _FINITE else None

    @classmethod
    def of(cls, value) -> "ExtRational":
        if isinstance(value, ExtRational):
            return value
        return cls(Fraction(value))

    @property
    def is_finite(self) -> bool:
        return self._sign == _FINITE

    @property
    def is_pos_inf(self) -> bool:
        return self._sign == _POS

    @property
    def is_neg_inf(self) -> bool:
        return self._sign == _NEG

    @property
    def value(self) -> Fraction:
        if self._sign != _FINITE:
            raise ValueError("infinite ExtRational has no finite value")
        return self._value

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExtRational(other)
        if not isinstance(other, ExtRational):
            return NotImplemented
        if self._sign != other._sign:
            return False
        return self._sign != _FINITE or self._value == other._value

    def __lt__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExtRational(other)
        if not isinstance(other, ExtRational):
            return NotImplemented
        if self._sign != other._sign:
            return self._sign < other._sign
        return self._sign == _FINITE and self._value < other._value

    def __hash__(self):
        return hash((self._sign, self._value))

    def __sub__(self, other) -> "ExtRational":
        # Only finite shifts are ever needed (the "- 1" in the main formula);
        # infinities absorb them.
        if self._sign != _FINITE:
            return self
        if isinstance(other, ExtRational):
            other = other.value
        return ExtRational(self._value - Fraction(other))

    def __float__(self) -> float:
        if self._sign == _POS:
            return float("inf")
        if self._sign == _NEG:
            return float("-inf")
        return float(self._value)

    def __repr__(self):
        return f"ExtRational({self})"

    def __str__(self):
        if self._sign == _POS:
            return "+inf"
        if self._sign == _NEG:
            return "-inf"
        return str(self._value)

    def to_json(self):
        """JSON form: {"num": .., "den": ..} for finite, "+inf"/"-inf" otherwise."""
        if self._sign == _POS:
            return "+inf"
        if self._sign == _NEG:
            return "-inf"
        return {"num": self._value.numerator, "den": self._value.denominator}


POS_INF = ExtRational(0, _POS)
NEG_INF = ExtRational(0, _NEG)


def ext_min(values) -> ExtRational:
    """Minimum with the inf-of-empty-set convention (+inf)."""
    values = list(values)
    return min(values) if values else POS_INF


def ext_max(values) -> ExtRational:
    """Maximum with the sup-of-empty-set convention (-inf)."""
    values = list(values)
    return max(values) if values else NEG_INF


@dataclass(frozen=True)
class GaussianRational:
    """An exact complex number re + im*i with rational parts.

    ``Fraction`` keeps denominators positive and reduced, so the invariants
    come for free.  This is a field, which is what the univariate gcd
    machinery needs.
    """

    re: Fraction
    im: Fraction = Fraction(0)

    @classmethod
    def of(cls, re, im=0) -> "GaussianRational":
        if isinstance(re, GaussianRational):
            return re
        return cls(Fraction(re), Fraction(im))

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational.of(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: "GaussianRational") -> "GaussianRational":
        if other.is_zero:
            raise ZeroDivisionError("division by zero Gaussian rational")
        norm = other.re * other.re + other.im * other.im
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        imag = "i" if mag == 1 else f"{mag}i"
        return f"({self.re}{sign}{imag})"


QI_ZERO = GaussianRational(Fraction(0))
QI_ONE = GaussianRational(Fraction(1))
QI_I = GaussianRational(Fraction(0), Fraction(1))
