"""Exact rationals with one symbolic positive infinitesimal.

Heights on the cylinder are compared as ``value + eps_coeff * eps`` where
``eps`` is smaller than any positive rational.  Ordering is lexicographic in
``(value, eps_coeff)``, which settles every "just above / just below a
puncture" comparison without floating point.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Union

from .errors import DomainError, NonGenericError

Rat = Fraction
RatLike = Union[int, Fraction]

HALF = Fraction(1, 2)


def as_rat(x: RatLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@functools.total_ordering
@dataclass(frozen=True, eq=False)
class EpsRat:
    """``value + eps_coeff * eps`` for a fixed positive infinitesimal ``eps``."""

    value: Fraction
    eps_coeff: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", as_rat(self.value))
        object.__setattr__(self, "eps_coeff", as_rat(self.eps_coeff))

    @classmethod
    def coerce(cls, x: "EpsRat | RatLike") -> "EpsRat":
        if isinstance(x, EpsRat):
            return x
        return cls(as_rat(x), Fraction(0))

    def _key(self) -> tuple[Fraction, Fraction]:
        return (self.value, self.eps_coeff)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (EpsRat, int, Fraction)):
            return self._key() == EpsRat.coerce(other)._key()
        return NotImplemented

    def __lt__(self, other: "EpsRat | RatLike") -> bool:
        if isinstance(other, (EpsRat, int, Fraction)):
            return self._key() < EpsRat.coerce(other)._key()
        return NotImplemented

    def __hash__(self) -> int:
        if self.eps_coeff == 0:
            return hash(self.value)
        return hash(self._key())

    def __add__(self, other: "EpsRat | RatLike") -> "EpsRat":
        o = EpsRat.coerce(other)
        return EpsRat(self.value + o.value, self.eps_coeff + o.eps_coeff)

    __radd__ = __add__

    def __neg__(self) -> "EpsRat":
        return EpsRat(-self.value, -self.eps_coeff)

    def __sub__(self, other: "EpsRat | RatLike") -> "EpsRat":
        return self + (-EpsRat.coerce(other))

    def __rsub__(self, other: RatLike) -> "EpsRat":
        return EpsRat.coerce(other) - self

    def __mul__(self, k: RatLike) -> "EpsRat":
        # Products of two infinitesimal parts would be second order; refuse them.
        if isinstance(k, EpsRat):
            if k.eps_coeff != 0 and self.eps_coeff != 0:
                raise TypeError("product of two infinitesimal quantities")
            if k.eps_coeff == 0:
                k = k.value
            else:
                return k * self.value
        k = as_rat(k)
        return EpsRat(self.value * k, self.eps_coeff * k)

    __rmul__ = __mul__

    def __truediv__(self, k: RatLike) -> "EpsRat":
        k = as_rat(k)
        if k == 0:
            raise ZeroDivisionError("EpsRat division by zero")
        return EpsRat(self.value / k, self.eps_coeff / k)

    def sign(self) -> int:
        if self.value != 0:
            return 1 if self.value > 0 else -1
        if self.eps_coeff != 0:
            return 1 if self.eps_coeff > 0 else -1
        return 0

    def __repr__(self) -> str:
        if self.eps_coeff == 0:
            return f"EpsRat({self.value})"
        return f"EpsRat({self.value} {'+' if self.eps_coeff > 0 else '-'} {abs(self.eps_coeff)}eps)"


def cmp(a: "EpsRat | RatLike", b: "EpsRat | RatLike") -> int:
    """Three-way comparison: -1, 0 or 1."""
    a, b = EpsRat.coerce(a), EpsRat.coerce(b)
    if a < b:
        return -1
    if a == b:
        return 0
    return 1


def level_of(h: "EpsRat | RatLike") -> int:
    """The level ``i`` of a height, i.e. the unique ``i`` with ``i - 1/2 < h < i + 1/2``."""
    h = EpsRat.coerce(h)
    shifted = h.value + HALF
    base = shifted.numerator // shifted.denominator
    if shifted.denominator != 1:
        return base
    # value is a half-integer: the infinitesimal part picks the side
    if h.eps_coeff > 0:
        return base
    if h.eps_coeff < 0:
        return base - 1
    raise NonGenericError(f"height {h.value} lies on a puncture row")


@dataclass(frozen=True)
class Slope:
    """A reduced surgery slope ``p/q``; ``p > 0`` unless the slope is ``0 = 0/1``.

    ``1/0`` is the slope at infinity.
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        p, q = self.p, self.q
        if p == 0 and q == 0:
            raise DomainError("0/0 is not a slope")
        g = gcd(p, q)
        p, q = p // g, q // g
        if p < 0 or (p == 0 and q < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def value(self) -> Fraction:
        if self.q == 0:
            raise DomainError("the slope at infinity has no rational value")
        return Fraction(self.p, self.q)

    def sign(self) -> int:
        if self.q == 0:
            return 0
        if self.p == 0:
            return 0
        return 1 if self.q > 0 else -1

    def __str__(self) -> str:
        if self.q == 0:
            return "inf"
        if self.q < 0:
            return f"-{self.p}/{-self.q}"
        return f"{self.p}/{self.q}"


def reduce_slope(p: int, q: int) -> Slope:
    return Slope(p, q)


def rat_str(x: RatLike) -> str:
    """Canonical text form: ``"3"`` or ``"-7/2"``."""
    x = as_rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
