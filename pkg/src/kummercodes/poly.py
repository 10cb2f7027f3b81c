"""Univariate polynomial arithmetic over F_q.

Dense little-endian coefficient representation with no trailing zeros; the
zero polynomial is the empty coefficient sequence.  Degrees stay small here
(around 10), so schoolbook algorithms are used throughout.
"""

from __future__ import annotations

from typing import Iterable

from .gf import Field, FieldElement


class Polynomial:
    """Immutable polynomial with FieldElement coefficients."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[FieldElement | int] = ()):
        cs = [field.element(c) if not isinstance(c, FieldElement) else c for c in coeffs]
        for c in cs:
            if c.field != field:
                raise ValueError("coefficient from a different field")
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def x(cls, field: Field) -> "Polynomial":
        return cls(field, [field.zero(), field.one()])

    @classmethod
    def from_roots(cls, field: Field, roots: Iterable[FieldElement | int]) -> "Polynomial":
        """The monic polynomial with the given roots (with multiplicity)."""
        out = cls(field, [field.one()])
        for a in roots:
            a = field.element(a) if not isinstance(a, FieldElement) else a
            out = out * cls(field, [-a, field.one()])
        return out

    @classmethod
    def parse(cls, field: Field, text: str) -> "Polynomial":
        """Parse the comma-separated little-endian encoding format.

        "0,4,0,0,0,1" is x**5 + 4x when the base characteristic is 5.
        """
        parts = [s.strip() for s in text.split(",")]
        try:
            encs = [int(s) for s in parts]
        except ValueError as exc:
            raise ValueError(f"bad polynomial literal {text!r}: {exc}") from exc
        return cls(field, [field.element(n) for n in encs])

    def format(self) -> str:
        """Inverse of :meth:`parse`; the zero polynomial prints as "0"."""
        if not self.coeffs:
            return "0"
        return ",".join(str(c.enc) for c in self.coeffs)

    # -- structure ------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> FieldElement:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        inv = self.leading_coefficient().inverse()
        return Polynomial(self.field, [c * inv for c in self.coeffs])

    # -- ring operations -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise ValueError("polynomials over different fields")
            return other
        if isinstance(other, (FieldElement, int)):
            return Polynomial(self.field, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero()
        a = list(self.coeffs) + [z] * (n - len(self.coeffs))
        b = list(other.coeffs) + [z] * (n - len(other.coeffs))
        return Polynomial(self.field, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial(self.field)
        z = self.field.zero()
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial(self.field, [self.field.one()])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial(self.field), self
        inv_lead = other.leading_coefficient().inverse()
        quot = [self.field.zero()] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lead
            quot[k] = c
            if not c.is_zero():
                for i, b in enumerate(other.coeffs):
                    rem[k + i] = rem[k + i] - c * b
        return Polynomial(self.field, quot), Polynomial(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self) -> "Polynomial":
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(self.coeffs[i] * _int_in_field(self.field, i))
        return Polynomial(self.field, out)

    def __call__(self, a: FieldElement) -> FieldElement:
        """Evaluate by Horner's rule."""
        if not isinstance(a, FieldElement):
            a = self.field.element(a)
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Polynomial({self.format()!r})"


def _int_in_field(field: Field, n: int) -> FieldElement:
    """The image of the integer n in F_q (n times 1)."""
    return field.element([n % field.p] + [0] * (field.e - 1))


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor (gcd with 0 is the other argument, monic)."""
    if f.field != g.field:
        raise ValueError("polynomials over different fields")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def is_separable(f: Polynomial) -> bool:
    """True iff f has pairwise distinct roots, i.e. gcd(f, f') is constant."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    d = f.derivative()
    if d.is_zero():
        return f.degree == 0
    return gcd(f, d).degree == 0


def roots_in_field(f: Polynomial) -> set[FieldElement]:
    """{a in F_q : f(a) = 0}, by exhaustive scan of the field."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    return {a for a in f.field.elements() if f(a).is_zero()}
