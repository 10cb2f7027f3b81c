"""Exact arithmetic in prime-power finite fields F_q, built from integers up.

Elements are coefficient vectors modulo a fixed monic irreducible polynomial
over F_p.  Every element has a canonical integer encoding
``enc = sum(coeffs[i] * p**i)`` in ``[0, q)``, which is the wire format used
throughout the package.  No floating point, no discrete-log shortcuts: all
searches are exhaustive scans, which is fine at desk scale (q <= 2**16).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
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


# ---------------------------------------------------------------------------
# polynomial helpers over the prime field F_p, on plain int tuples
# (little-endian, used only for modulus construction and reduction)

def _fp_trim(c: tuple[int, ...]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def _fp_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(tuple(out))


def _fp_mod(a: tuple[int, ...], mod: tuple[int, ...], p: int) -> tuple[int, ...]:
    # mod must be monic
    a = list(a)
    dm = len(mod) - 1
    while len(a) > dm:
        lead = a[-1] % p
        if lead:
            off = len(a) - 1 - dm
            for i in range(dm):
                a[off + i] = (a[off + i] - lead * mod[i]) % p
        a.pop()
    return _fp_trim(tuple(x % p for x in a))


def _fp_is_irreducible(f: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    deg = len(f) - 1
    if deg <= 0:
        return False
    if f[0] == 0 and deg > 1:
        return False  # divisible by x
    for d in range(1, deg // 2 + 1):
        for low in range(p ** d):
            cand = _decode_coeffs(low, p, d) + (1,)
            if not _fp_mod(f, cand, p):
                return False
    return True


def _decode_coeffs(n: int, p: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        n, r = divmod(n, p)
        out.append(r)
    return tuple(out)


@dataclass(frozen=True)
class FieldTables:
    """Dense lookup tables for arithmetic on canonical encodings.

    Used by the linear-algebra layer (matrix reduction, codeword
    enumeration) so that hot loops run on numpy integer arrays while the
    arithmetic itself stays the exact table built from Field operations.
    """

    add: np.ndarray   # add[i, j] = enc(a_i + a_j)
    mul: np.ndarray   # mul[i, j] = enc(a_i * a_j)
    neg: np.ndarray   # neg[i]    = enc(-a_i)
    inv: np.ndarray   # inv[i]    = enc(a_i**-1); inv[0] = 0 (unused)


class Field:
    """The field F_q, q = p**e, with a fixed monic irreducible modulus.

    Instances are immutable and hashable.  Construct via :func:`make_field`
    unless a specific modulus is wanted.
    """

    __slots__ = ("p", "e", "q", "modulus", "_tables", "__weakref__")

    def __init__(self, p: int, e: int, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        if e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        if modulus is None:
            modulus = _smallest_irreducible(p, e)
        modulus = _fp_trim(tuple(c % p for c in modulus))
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree e")
        if not _fp_is_irreducible(modulus, p):
            raise ValueError("modulus is not irreducible over F_p")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "q", p ** e)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "_tables", None)

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.e == other.e
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return f"Field(p={self.p}, e={self.e})"

    # -- element construction ------------------------------------------------

    def element(self, value) -> FieldElement:
        """Make an element from an encoding in [0, q) or a coefficient vector."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            if self.e == 1:
                return FieldElement(self, (value % self.p,))
            if not 0 <= value < self.q:
                raise ValueError(f"encoding {value} outside [0, {self.q})")
            return FieldElement(self, _decode_coeffs(value, self.p, self.e))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) != self.e:
            raise ValueError(f"expected {self.e} coefficients, got {len(coeffs)}")
        return FieldElement(self, coeffs)

    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.e)

    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.e - 1))

    def elements(self) -> Iterator[FieldElement]:
        """All field elements in increasing encoding order."""
        for n in range(self.q):
            yield self.element(n)

    # -- internal arithmetic on coefficient tuples ---------------------------

    def _add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def _sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def _neg(self, a):
        return tuple((-x) % self.p for x in a)

    def _mul(self, a, b):
        prod = _fp_mul(a, b, self.p)
        red = _fp_mod(prod, self.modulus, self.p)
        return red + (0,) * (self.e - len(red))

    def tables(self) -> FieldTables:
        """enc-indexed add/mul/neg/inv tables (built once, then cached)."""
        if self._tables is not None:
            return self._tables
        q = self.q
        els = [self.element(n) for n in range(q)]
        add = np.zeros((q, q), dtype=np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        neg = np.zeros(q, dtype=np.int64)
        inv = np.zeros(q, dtype=np.int64)
        for i in range(q):
            neg[i] = (-els[i]).enc
            if i:
                inv[i] = els[i].inverse().enc
            for j in range(q):
                add[i, j] = (els[i] + els[j]).enc
                mul[i, j] = (els[i] * els[j]).enc
        tabs = FieldTables(add=add, mul=mul, neg=neg, inv=inv)
        object.__setattr__(self, "_tables", tabs)
        return tabs


class FieldElement:
    """Immutable element of a :class:`Field`; supports the usual operators."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: tuple[int, ...]):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def enc(self) -> int:
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.field.p + c
        return n

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("operands belong to different fields")
            return other
        if isinstance(other, int):
            return self.field.element(other % self.field.p if self.field.e == 1 else other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("0 has no multiplicative inverse")
        # Lagrange: a**(q-2) * a = a**(q-1) = 1
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"{self.enc}"


@lru_cache(maxsize=None)
def _smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Monic irreducible of degree e over F_p with smallest encoding.

    Candidates are scanned by the integer encoding of their non-leading
    coefficients, so the result is deterministic across runs.  For e = 1
    this yields x itself.
    """
    for low in range(p ** e):
        cand = _decode_coeffs(low, p, e) + (1,)
        if _fp_is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


@lru_cache(maxsize=None)
def make_field(p: int, e: int = 1) -> Field:
    """The field F_(p**e) with the encoding-smallest irreducible modulus."""
    return Field(p, e)


def mth_roots(v: FieldElement, m: int) -> set[FieldElement]:
    """All b in F_q with b**m = v, by exhaustive scan.

    For v != 0 the result has size 0 or gcd(m, q-1); 0 maps to {0}.
    """
    if m <= 0:
        raise ValueError(f"root exponent must be positive, got {m}")
    return {b for b in v.field.elements() if b ** m == v}
