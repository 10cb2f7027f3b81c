"""The Kummer extension y**m = f(x)**lambda over F_q.

Validates the defining data, computes the genus, enumerates the degree-one
places (the distinguished totally ramified ones plus the ordinary affine
points), and records the standard principal divisors that drive all the
valuation bookkeeping elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd as int_gcd
from pathlib import Path

from .gf import Field, FieldElement, make_field
from .poly import Polynomial, is_separable, roots_in_field
from .rr import Divisor


class ConfigError(ValueError):
    """Malformed curve configuration; carries the input line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Place:
    """A degree-one place: P_inf, a ramified P_i, or an ordinary point (x, y)."""

    kind: str  # "infinity" | "ramified" | "ordinary"
    index: int = 0
    alpha: FieldElement | None = None
    x: FieldElement | None = None
    y: FieldElement | None = None

    @classmethod
    def infinity(cls) -> "Place":
        return cls(kind="infinity")

    @classmethod
    def ramified(cls, index: int, alpha: FieldElement) -> "Place":
        return cls(kind="ramified", index=index, alpha=alpha)

    @classmethod
    def ordinary(cls, x: FieldElement, y: FieldElement) -> "Place":
        return cls(kind="ordinary", x=x, y=y)

    def label(self) -> str:
        if self.kind == "infinity":
            return "P_inf"
        if self.kind == "ramified":
            return f"P_{self.index}"
        return f"P({self.x.enc},{self.y.enc})"


@dataclass(frozen=True)
class PrincipalDivisors:
    """Divisors of x - alpha_i, y, f(x), and the degree-r pole function.

    z = f(x)**num_pow / y**den_pow has pole divisor r * P_inf; the exponents
    satisfy num_pow * m - den_pow * lambda = 1.
    """

    x_minus_alpha: dict[int, Divisor]
    y: Divisor
    f: Divisor
    z: Divisor
    z_num_pow: int
    z_den_pow: int


class KummerCurve:
    """Validated curve data; immutable and hashable. Build via make_curve."""

    __slots__ = ("field", "m", "lam", "f", "r", "genus", "alphas",
                 "_places", "_cofactors")

    def __init__(self, field: Field, m: int, lam: int, f: Polynomial):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "r", f.degree)
        object.__setattr__(self, "genus", (m - 1) * (f.degree - 1) // 2)
        alphas = tuple(sorted(roots_in_field(f), key=lambda a: a.enc))
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "_places", None)
        object.__setattr__(self, "_cofactors", {})

    def __setattr__(self, name, value):
        raise AttributeError("KummerCurve is immutable")

    def __eq__(self, other):
        if isinstance(other, KummerCurve):
            return (self.field, self.m, self.lam, self.f) == \
                   (other.field, other.m, other.lam, other.f)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.m, self.lam, self.f))

    def __repr__(self):
        return (f"KummerCurve(q={self.field.q}, m={self.m}, lam={self.lam}, "
                f"f={self.f.format()}, g={self.genus})")

    # -- places ----------------------------------------------------------------

    def place_infinity(self) -> Place:
        return Place.infinity()

    def ramified_place(self, index: int) -> Place:
        if not 1 <= index <= len(self.alphas):
            raise ValueError(
                f"ramified place index {index} out of range 1..{len(self.alphas)}"
            )
        return Place.ramified(index, self.alphas[index - 1])

    def rational_places(self) -> tuple[Place, ...]:
        """All degree-one places: P_inf, then the ramified places in
        encoding order of their centers, then the ordinary points in
        lexicographic (enc x, enc y) order."""
        if self._places is not None:
            return self._places
        places = [Place.infinity()]
        for i, a in enumerate(self.alphas, start=1):
            places.append(Place.ramified(i, a))
        power_of = {}
        for b in self.field.elements():
            power_of.setdefault((b ** self.m).enc, []).append(b)
        for a in self.field.elements():
            fa = self.f(a)
            if fa.is_zero():
                continue
            target = (fa ** self.lam).enc
            for b in power_of.get(target, ()):
                places.append(Place.ordinary(a, b))
        out = tuple(places)
        object.__setattr__(self, "_places", out)
        return out

    def cofactor(self, index: int) -> Polynomial:
        """f(x) / (x - alpha_index), used when evaluating at P_index."""
        if index not in self._cofactors:
            alpha = self.alphas[index - 1]
            linear = Polynomial(self.field, [-alpha, self.field.one()])
            quot, rem = divmod(self.f, linear)
            assert rem.is_zero()
            self._cofactors[index] = quot
        return self._cofactors[index]

    def principal_divisors(self) -> PrincipalDivisors:
        m, lam, r = self.m, self.lam, self.r
        x_div = {
            i: Divisor(coeff_inf=-m, coeffs={i: m})
            for i in range(1, len(self.alphas) + 1)
        }
        all_places = {i: 1 for i in range(1, r + 1)}
        y_div = Divisor(coeff_inf=-r * lam, coeffs={i: lam for i in all_places})
        f_div = Divisor(coeff_inf=-r * m, coeffs={i: m for i in all_places})
        z_div = Divisor(coeff_inf=-r, coeffs=all_places)
        if lam == 1:
            num = 1
        else:
            num = pow(m, -1, lam)
        den = (num * m - 1) // lam
        assert num >= 1 and den >= 1 and num * m - den * lam == 1
        return PrincipalDivisors(
            x_minus_alpha=x_div, y=y_div, f=f_div, z=z_div,
            z_num_pow=num, z_den_pow=den,
        )


def make_curve(field: Field, m: int, lam: int, f: Polynomial) -> KummerCurve:
    """Validate and build the curve y**m = f(x)**lam.

    Requirements: m >= 2 and prime to the characteristic, f separable of
    degree >= 2 (degree 1 would give genus 0, where the whole gap theory
    is empty), gcd(m, r*lam) = 1.  lam is normalized into (0, m).
    """
    if f.field != field:
        raise ValueError("f is defined over a different field")
    if m < 2:
        raise ValueError(f"Kummer degree m must be >= 2, got {m}")
    if m % field.p == 0:
        raise ValueError(f"characteristic {field.p} divides m = {m}")
    if lam < 1:
        raise ValueError(f"lambda must be positive, got {lam}")
    r = f.degree
    if r < 2:
        raise ValueError(
            f"deg f = {r} gives a degenerate (genus zero) curve; need deg f >= 2"
        )
    lam = lam % m
    if int_gcd(m, r * lam) != 1:
        raise ValueError(f"gcd(m, r*lambda) = {int_gcd(m, r * lam)} must be 1")
    if not is_separable(f):
        raise ValueError("f must be separable (pairwise distinct roots)")
    return KummerCurve(field, m, lam, f)


# ---------------------------------------------------------------------------
# plain-text curve configuration: "key = value" lines for p, e, m, lambda, f


_CONFIG_KEYS = ("p", "e", "m", "lambda", "f")


def parse_curve_config(text: str) -> dict:
    """Parse the key/value curve format.

    Lines are "key = value"; '#' starts a comment; blank lines are skipped.
    Keys: p, e, m, lambda (integers) and f (comma-separated coefficient
    encodings, little-endian).  Errors carry the offending line number.
    """
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"expected 'key = value', got {raw.strip()!r}", lineno)
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"unknown key {key!r}", lineno)
        if key in values:
            raise ConfigError(f"duplicate key {key!r}", lineno)
        if key == "f":
            try:
                values["f"] = [int(s.strip()) for s in val.split(",")]
            except ValueError:
                raise ConfigError(f"bad coefficient list {val!r}", lineno) from None
        else:
            try:
                values[key] = int(val)
            except ValueError:
                raise ConfigError(f"bad integer {val!r} for key {key!r}", lineno) from None
    missing = [k for k in _CONFIG_KEYS if k not in values]
    if missing:
        raise ConfigError(f"missing keys: {', '.join(missing)}")
    return values


def curve_from_config(cfg: dict) -> KummerCurve:
    try:
        field = make_field(cfg["p"], cfg["e"])
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    encs = cfg["f"]
    bad = [n for n in encs if not 0 <= n < field.q]
    if bad:
        raise ConfigError(f"coefficient encodings {bad} outside [0, {field.q})")
    f = Polynomial(field, [field.element(n) for n in encs])
    return make_curve(field, cfg["m"], cfg["lambda"], f)


def load_curve(path: str | Path) -> KummerCurve:
    """Read a curve configuration file and build the curve."""
    return curve_from_config(parse_curve_config(Path(path).read_text(encoding="utf-8")))
