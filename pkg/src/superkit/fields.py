"""Exact scalar fields: the rationals and prime fields of odd characteristic.

Every computation in this package is exact.  Scalars are either
``fractions.Fraction`` (characteristic 0) or :class:`FpElement`
(characteristic p, p an odd prime).  Characteristic 2 is rejected because
sign rules and the 1/2 appearing in squaring identities need 2 invertible.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


class FpElement:
    """An element of Z/p represented by its least nonnegative residue."""

    __slots__ = ("p", "v")

    def __init__(self, p, v):
        self.p = p
        self.v = v % p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldError("mixed characteristics %d and %d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return FpElement(self.p, other)
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise FieldError("denominator divisible by %d" % self.p)
            return FpElement(self.p, other.numerator * pow(other.denominator, -1, self.p))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElement(self.p, self.v + o.v)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElement(self.p, self.v - o.v)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElement(self.p, o.v - self.v)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElement(self.p, self.v * o.v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return FpElement(self.p, self.v * pow(o.v, -1, self.p))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __neg__(self):
        return FpElement(self.p, -self.v)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.v == o.v

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "%d (mod %d)" % (self.v, self.p)


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """Common interface: Rationals() or PrimeField(p)."""

    def sum(self, xs):
        total = self.zero
        for x in xs:
            total = total + x
        return total


class Rationals(Field):
    char = 0
    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, fr):
        return Fraction(fr)

    def parse(self, text):
        try:
            return Fraction(str(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError("bad rational %r" % (text,)) from exc

    def render(self, x):
        if x.denominator == 1:
            return str(x.numerator)
        return "%d/%d" % (x.numerator, x.denominator)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    def __init__(self, p):
        if not _is_prime(p):
            raise FieldError("%r is not prime" % (p,))
        if p == 2:
            raise FieldError("characteristic 2 is not supported")
        self.p = p
        self.char = p
        self.name = "F_%d" % p
        self.zero = FpElement(p, 0)
        self.one = FpElement(p, 1)

    def from_int(self, n):
        return FpElement(self.p, n)

    def from_fraction(self, fr):
        fr = Fraction(fr)
        if fr.denominator % self.p == 0:
            raise FieldError("denominator divisible by %d" % self.p)
        return FpElement(self.p, fr.numerator * pow(fr.denominator, -1, self.p))

    def parse(self, text):
        return self.from_fraction(Fraction(str(text)))

    def render(self, x):
        return str(x.v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return self.name


def parse_field(spec):
    """Parse a field description: "q" for the rationals, "p=5" for F_5."""
    spec = str(spec).strip().lower()
    if spec in ("q", "qq", "0"):
        return Rationals()
    if spec.startswith("p="):
        return PrimeField(int(spec[2:]))
    if spec.isdigit():
        return PrimeField(int(spec))
    raise FieldError("cannot parse field spec %r" % (spec,))
