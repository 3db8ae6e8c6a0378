"""Exact scalar arithmetic: big integers, rationals, and prime fields.

Every coefficient in this package lives in one of two effective domains:
the rationals (represented by fractions.Fraction) or a prime field GF(p)
(represented by FpElement).  Both are exact; nothing here ever rounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class DomainMismatchError(ValueError):
    """Two values from different coefficient domains met in one operation."""


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative integers; gcd(0, 0) = 0."""
    if a < 0 or b < 0:
        raise ValueError("gcd expects nonnegative integers")
    return math.gcd(a, b)


def is_prime(n: int) -> bool:
    """Trial division up to sqrt(n); moduli here are desk scale."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class FpElement:
    """A residue modulo a prime p, normalized to [0, p).

    Supports +, -, *, /, ** and mixes freely with Python ints (which are
    reduced mod p).  Mixing residues of different primes, or residues with
    rationals, raises DomainMismatchError.  The modulus is not re-checked
    for primality here; construct fields through prime_field().
    """

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise DomainMismatchError(
                    f"cannot mix GF({self.p}) and GF({other.p}) values"
                )
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        if isinstance(other, Fraction):
            raise DomainMismatchError(f"cannot mix GF({self.p}) and rational values")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0 and self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return FpElement(pow(self.value, n, self.p), self.p)

    def inverse(self) -> "FpElement":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return FpElement(pow(self.value, -1, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"FpElement({self.value} mod {self.p})"


Scalar = Union[Fraction, FpElement]


@dataclass(frozen=True)
class CoeffDomain:
    """Coefficient domain tag: characteristic 0 is QQ, p > 0 is GF(p)."""

    char: int = 0

    def __post_init__(self):
        if self.char != 0 and not is_prime(self.char):
            raise ValueError(f"field characteristic must be 0 or a prime, got {self.char}")

    @property
    def is_rational(self) -> bool:
        return self.char == 0

    def coerce(self, v) -> Scalar:
        """Map an int, Fraction, or same-domain scalar into this domain."""
        if self.char == 0:
            if isinstance(v, Fraction):
                return v
            if isinstance(v, int):
                return Fraction(v)
            if isinstance(v, FpElement):
                raise DomainMismatchError(f"cannot place GF({v.p}) value into QQ")
        else:
            if isinstance(v, FpElement):
                if v.p != self.char:
                    raise DomainMismatchError(
                        f"cannot place GF({v.p}) value into GF({self.char})"
                    )
                return v
            if isinstance(v, int):
                return FpElement(v, self.char)
            if isinstance(v, Fraction):
                num = FpElement(v.numerator, self.char)
                den = FpElement(v.denominator, self.char)
                return num / den
        raise TypeError(f"cannot coerce {type(v).__name__} into {self}")

    @property
    def zero(self) -> Scalar:
        return self.coerce(0)

    @property
    def one(self) -> Scalar:
        return self.coerce(1)

    def __str__(self):
        return "QQ" if self.char == 0 else f"GF({self.char})"


RATIONAL = CoeffDomain(0)


def prime_field(p: int) -> CoeffDomain:
    """The prime field GF(p); raises ValueError if p is not prime."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return CoeffDomain(p)


def domain_of(s: Scalar) -> CoeffDomain:
    if isinstance(s, Fraction):
        return RATIONAL
    if isinstance(s, FpElement):
        return CoeffDomain(s.p)
    raise TypeError(f"not a scalar: {type(s).__name__}")


def inverse(s: Scalar) -> Scalar:
    """Multiplicative inverse of a nonzero scalar."""
    if isinstance(s, FpElement):
        return s.inverse()
    return Fraction(1) / s
