"""Divisors on the distinguished places and Riemann-Roch spaces.

Divisors here live on the totally ramified places P_1..P_r (over the roots
of f) and P_inf.  Such divisors are invariant under the Kummer automorphisms,
so the space L(D) splits into y-power strata, each a genus-zero Riemann-Roch
space of the restricted divisor on the rational subfield.  That makes the
dimension a pure floor-arithmetic computation and gives an explicit monomial
basis, with no linear algebra involved.

The ``*_by_dims`` functions are the dimension oracles: they decide gap,
two-point membership and pure-gap questions straight from the definitions,
and are used to cross-check every closed form in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Mapping

if TYPE_CHECKING:  # pragma: no cover
    from .curve import KummerCurve, Place
    from .gf import FieldElement


class Divisor:
    """Integer combination of the places P_1..P_r and P_inf.

    Indices 1..len(curve.alphas) are the ramified places with centers in
    F_q (in encoding order); larger indices up to r denote the remaining
    conjugate places, which can carry coefficients for dimension counts but
    cannot be used in explicit bases or code supports.
    """

    __slots__ = ("coeff_inf", "coeffs")

    def __init__(self, coeff_inf: int = 0, coeffs: Mapping[int, int] | None = None):
        items = {}
        for i, c in (coeffs or {}).items():
            if i < 1:
                raise ValueError(f"place index must be >= 1, got {i}")
            if c:
                items[int(i)] = int(c)
        object.__setattr__(self, "coeff_inf", int(coeff_inf))
        object.__setattr__(self, "coeffs", tuple(sorted(items.items())))

    def __setattr__(self, name, value):
        raise AttributeError("Divisor is immutable")

    @classmethod
    def at_infinity(cls, n: int) -> "Divisor":
        return cls(coeff_inf=n)

    @classmethod
    def at_place(cls, index: int, n: int) -> "Divisor":
        return cls(coeffs={index: n})

    def coeff(self, index: int) -> int:
        for i, c in self.coeffs:
            if i == index:
                return c
        return 0

    @property
    def degree(self) -> int:
        return self.coeff_inf + sum(c for _, c in self.coeffs)

    @property
    def support_indices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.coeffs)

    def __add__(self, other: "Divisor") -> "Divisor":
        merged = dict(self.coeffs)
        for i, c in other.coeffs:
            merged[i] = merged.get(i, 0) + c
        return Divisor(self.coeff_inf + other.coeff_inf, merged)

    def __neg__(self) -> "Divisor":
        return Divisor(-self.coeff_inf, {i: -c for i, c in self.coeffs})

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __rmul__(self, n: int) -> "Divisor":
        return Divisor(n * self.coeff_inf, {i: n * c for i, c in self.coeffs})

    def __eq__(self, other):
        if isinstance(other, Divisor):
            return self.coeff_inf == other.coeff_inf and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeff_inf, self.coeffs))

    def __repr__(self):
        parts = [f"{c}*P_{i}" for i, c in self.coeffs]
        if self.coeff_inf or not parts:
            parts.insert(0, f"{self.coeff_inf}*P_inf")
        return " + ".join(parts)


def dim(curve: "KummerCurve", D: Divisor) -> int:
    """l(D), the dimension of the Riemann-Roch space of D.

    Sums genus-zero dimensions over the y-power strata; exact for any
    divisor supported on the distinguished places, any coefficient signs.
    """
    m, lam, r = curve.m, curve.lam, curve.r
    named = len(curve.alphas)
    total = 0
    for t in range(m):
        deg = (D.coeff_inf - t * r * lam) // m
        shared = (t * lam) // m
        deg += (r - named) * shared
        for i in range(1, named + 1):
            deg += (D.coeff(i) + t * lam) // m
        for i, c in D.coeffs:
            if i > named:
                if i > r:
                    raise ValueError(f"place index {i} exceeds r={r}")
                # replace the default floor at an unnamed conjugate place
                deg += (c + t * lam) // m - shared
        if deg >= 0:
            total += deg + 1
    return total


def restrict(curve: "KummerCurve", D: Divisor) -> Divisor:
    """Push D down to the rational subfield: every coefficient floor-divided
    by the ramification index m."""
    m = curve.m
    return Divisor(D.coeff_inf // m, {i: c // m for i, c in D.coeffs})


@dataclass(frozen=True)
class BasisFunction:
    """x**x_pow * y**y_pow * prod_i (x - alpha_i)**(-denom[i]) * f(x)**(-f_pow).

    denom holds exponents for named ramified indices only; the remaining
    conjugate roots are absorbed into the f(x) power, which keeps every
    function F_q-rational.
    """

    y_pow: int
    x_pow: int
    denom: tuple[tuple[int, int], ...]
    f_pow: int

    def denom_exp(self, index: int) -> int:
        for i, e in self.denom:
            if i == index:
                return e
        return 0

    def valuation(self, curve: "KummerCurve", place: "Place") -> int:
        """Exact valuation at a distinguished place, from the standard
        divisors of x - alpha_i, y and f."""
        m, lam, r = curve.m, curve.lam, curve.r
        if place.kind == "infinity":
            v = -self.x_pow * m - self.y_pow * r * lam + self.f_pow * r * m
            for _, e in self.denom:
                v += e * m
            return v
        if place.kind != "ramified":
            raise ValueError("valuation tracked at distinguished places only")
        alpha = curve.alphas[place.index - 1]
        x_hits = self.x_pow if alpha.is_zero() else 0
        return self.y_pow * lam + m * (x_hits - self.denom_exp(place.index) - self.f_pow)

    def evaluate(self, curve: "KummerCurve", place: "Place") -> "FieldElement":
        """Value at a place outside the pole support.

        At ordinary places this is plain substitution.  At a ramified place
        the y-zeros cancel exactly against the denominator poles: a positive
        valuation gives 0, valuation zero forces y_pow == 0 and the value is
        read off after cancelling the (x - alpha) factors.
        """
        field = curve.field
        if place.kind == "ordinary":
            val = place.x ** self.x_pow * place.y ** self.y_pow
            for i, e in self.denom:
                val = val * (place.x - curve.alphas[i - 1]) ** (-e)
            if self.f_pow:
                val = val * curve.f(place.x) ** (-self.f_pow)
            return val
        if place.kind == "infinity":
            v = self.valuation(curve, place)
            if v < 0:
                raise ValueError("function has a pole at the evaluation place")
            if v > 0:
                return field.zero()
            # all factors are monic in x, so the leading coefficients cancel
            return field.one()
        # ramified place
        v = self.valuation(curve, place)
        if v < 0:
            raise ValueError("function has a pole at the evaluation place")
        if v > 0:
            return field.zero()
        assert self.y_pow == 0, "valuation 0 with a y factor is impossible"
        alpha = curve.alphas[place.index - 1]
        val = field.one() if alpha.is_zero() else alpha ** self.x_pow
        for i, e in self.denom:
            if i != place.index:
                val = val * (alpha - curve.alphas[i - 1]) ** (-e)
        if self.f_pow:
            val = val * curve.cofactor(place.index)(alpha) ** (-self.f_pow)
        return val

    def __str__(self):
        parts = []
        if self.x_pow:
            parts.append("x" if self.x_pow == 1 else f"x^{self.x_pow}")
        if self.y_pow:
            parts.append("y" if self.y_pow == 1 else f"y^{self.y_pow}")
        for i, e in self.denom:
            parts.append(f"(x-a{i})^{-e}")
        if self.f_pow:
            parts.append(f"f^{-self.f_pow}")
        return " * ".join(parts) if parts else "1"


@dataclass(frozen=True)
class RRBasis:
    """Explicit basis of L(D); len(functions) == dim(curve, D)."""

    functions: tuple[BasisFunction, ...]

    @property
    def dimension(self) -> int:
        return len(self.functions)

    def as_strings(self) -> list[str]:
        return [str(fn) for fn in self.functions]

    def to_dicts(self) -> list[dict]:
        """Exponent data of each basis monomial, JSON-ready."""
        return [
            {
                "x_pow": fn.x_pow,
                "y_pow": fn.y_pow,
                "denom": {str(i): e for i, e in fn.denom},
                "f_pow": fn.f_pow,
            }
            for fn in self.functions
        ]


def basis(curve: "KummerCurve", D: Divisor) -> RRBasis:
    """Monomial basis of L(D) from the y-power strata.

    Requires supp(D) inside the named ramified places (plus P_inf); the
    unnamed conjugate roots never need individual factors because they all
    carry the same stratum coefficient, which groups into a power of f.
    """
    m, lam, r = curve.m, curve.lam, curve.r
    named = len(curve.alphas)
    for i, _ in D.coeffs:
        if i > named:
            raise ValueError(
                f"divisor touches place P_{i} whose center is not in F_q; "
                "no rational basis is available"
            )
    funcs = []
    for t in range(m):
        shared = (t * lam) // m
        c_inf = (D.coeff_inf - t * r * lam) // m
        deg = c_inf + (r - named) * shared
        denom = {}
        for i in range(1, named + 1):
            ci = (D.coeff(i) + t * lam) // m
            deg += ci
            if ci != shared:
                denom[i] = ci - shared
        if deg < 0:
            continue
        denom_t = tuple(sorted(denom.items()))
        for j in range(deg + 1):
            funcs.append(BasisFunction(y_pow=t, x_pow=j, denom=denom_t, f_pow=shared))
    assert len(funcs) == dim(curve, D)
    return RRBasis(tuple(funcs))


# ---------------------------------------------------------------------------
# dimension oracles


def gap_by_dims(curve: "KummerCurve", place: "Place", s: int) -> bool:
    """s is a gap at the place iff l((s-1)P) == l(sP)."""
    if s < 1:
        raise ValueError("gap test needs s >= 1")
    if place.kind == "infinity":
        ds, dprev = Divisor.at_infinity(s), Divisor.at_infinity(s - 1)
    elif place.kind == "ramified":
        ds, dprev = Divisor.at_place(place.index, s), Divisor.at_place(place.index, s - 1)
    else:
        raise ValueError("gap oracle supports the distinguished places only")
    return dim(curve, ds) == dim(curve, dprev)


def member_by_dims(curve: "KummerCurve", a: int, b: int, index: int = 1) -> bool:
    """(a, b) in H(P_inf, P_index): the dimension must drop when either
    coordinate does, which is equivalent to a function with pole divisor
    exactly a*P_inf + b*P."""
    if a < 0 or b < 0:
        raise ValueError("membership is defined for non-negative pairs")
    full = dim(curve, Divisor(a, {index: b}))
    return (
        full > dim(curve, Divisor(a - 1, {index: b}))
        and full > dim(curve, Divisor(a, {index: b - 1}))
    )


def pure_gap_by_dims(curve: "KummerCurve", a: int, b: int, index: int = 1) -> bool:
    """(a, b) is a pure gap at (P_inf, P_index) iff dropping both
    coordinates by one leaves the dimension unchanged.

    Pairs with a zero coordinate are never pure (the constants always
    separate the two spaces), and the computation confirms that.
    """
    if a < 0 or b < 0:
        raise ValueError("pure-gap test needs non-negative coordinates")
    return dim(curve, Divisor(a, {index: b})) == dim(curve, Divisor(a - 1, {index: b - 1}))
