"""Exact scalar arithmetic over two ring contexts.

Rational scalars are stdlib :class:`fractions.Fraction` values: arbitrary
precision, always in lowest terms with a positive denominator, so equality
is plain structural equality. Prime-field scalars are :class:`FpElement`
residues modulo a fixed prime (default 101).

A ring context (:class:`RationalRing` or :class:`PrimeField`) bundles the
ring-specific operations the generic linear algebra needs: construction,
parsing, rendering, inversion, invertibility testing, and (rationals only)
comparison. Addition, subtraction, multiplication and negation go through
the ordinary Python operators on the scalars themselves.

Scalars from different contexts never mix: arithmetic between a rational
and a prime-field residue, or between residues modulo different primes,
raises :class:`ContextMismatchError`. No floating point is used anywhere
in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class CauchyKitError(Exception):
    """Base class for every error this package raises on purpose."""


class ContextMismatchError(CauchyKitError):
    """Scalars from different ring contexts met in one operation."""


class UnorderedRingError(CauchyKitError):
    """An ordering was requested in a ring that has none."""


class NotInvertibleError(CauchyKitError):
    """Inversion of a non-invertible element was attempted.

    The offending value is kept on ``.value`` so callers can report it.
    """

    def __init__(self, value, message: str | None = None):
        super().__init__(message or f"not invertible: {value!r}")
        self.value = value


def _is_prime(n: int) -> bool:
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
    """A residue modulo the prime ``p``. Immutable value object.

    Arithmetic with plain ``int`` lifts the integer into the field; any
    other operand type is a context mismatch.
    """

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ContextMismatchError(
                    f"mixed prime fields: p={self.p} and p={other.p}"
                )
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, (Fraction, float, complex)):
            raise ContextMismatchError(
                f"cannot combine F_{self.p} element with {type(other).__name__}"
            )
        return NotImplemented

    def __add__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(v - self.value, self.p)

    def __mul__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.value * v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __truediv__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        if v == 0:
            raise NotInvertibleError(FpElement(0, self.p))
        return FpElement(self.value * pow(v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        if self.value == 0:
            raise NotInvertibleError(self)
        return FpElement(v * pow(self.value, -1, self.p), self.p)

    def __pow__(self, exponent: int):
        if exponent < 0:
            if self.value == 0:
                raise NotInvertibleError(self)
            return FpElement(pow(self.value, exponent, self.p), self.p)
        return FpElement(pow(self.value, exponent, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def _no_order(self, other):
        raise UnorderedRingError(f"F_{self.p} has no ordering")

    __lt__ = __le__ = __gt__ = __ge__ = _no_order

    def __repr__(self):
        return f"FpElement({self.value}, p={self.p})"

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class RationalRing:
    """The field of arbitrary-precision rationals."""

    kind = "rational"
    is_ordered = True

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, v) -> Fraction:
        """Turn ``v`` into a rational scalar of this context.

        Accepts Fraction, int, and the text format understood by
        :meth:`parse`. Floats are rejected: this ring is exact.
        """
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, str):
            return self.parse(v)
        if isinstance(v, FpElement):
            raise ContextMismatchError(
                f"prime-field residue (p={v.p}) used in a rational context"
            )
        raise TypeError(f"cannot use {type(v).__name__} as an exact rational")

    def parse(self, text: str) -> Fraction:
        return Fraction(text.strip())

    def render(self, a) -> str:
        return str(self.coerce(a))

    def inv(self, a) -> Fraction:
        a = self.coerce(a)
        if a == 0:
            raise NotInvertibleError(a)
        return 1 / a

    def is_invertible(self, a) -> bool:
        return self.coerce(a) != 0

    def cmp(self, a, b) -> int:
        """Total order on the rationals: -1, 0, or +1."""
        a, b = self.coerce(a), self.coerce(b)
        return (a > b) - (a < b)


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_p. ``p`` must be prime (checked at construction)."""

    p: int = 101

    kind = "prime_field"
    is_ordered = False

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"prime field modulus must be prime, got {self.p}")

    @property
    def zero(self) -> FpElement:
        return FpElement(0, self.p)

    @property
    def one(self) -> FpElement:
        return FpElement(1, self.p)

    def coerce(self, v) -> FpElement:
        if isinstance(v, FpElement):
            if v.p != self.p:
                raise ContextMismatchError(
                    f"residue mod {v.p} used in F_{self.p} context"
                )
            return v
        if isinstance(v, int):
            return FpElement(v, self.p)
        if isinstance(v, str):
            return self.parse(v)
        if isinstance(v, Fraction):
            raise ContextMismatchError(
                f"rational scalar used in F_{self.p} context"
            )
        raise TypeError(f"cannot use {type(v).__name__} in F_{self.p}")

    def parse(self, text: str) -> FpElement:
        return FpElement(int(text.strip()), self.p)

    def render(self, a) -> str:
        return str(self.coerce(a).value)

    def inv(self, a) -> FpElement:
        a = self.coerce(a)
        if a.value == 0:
            raise NotInvertibleError(a)
        return FpElement(pow(a.value, self.p - 2, self.p), self.p)

    def is_invertible(self, a) -> bool:
        return self.coerce(a).value != 0

    def cmp(self, a, b) -> int:
        raise UnorderedRingError(f"F_{self.p} has no ordering")


RingContext = Union[RationalRing, PrimeField]
Scalar = Union[Fraction, FpElement]
