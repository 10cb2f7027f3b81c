"""Two-point Weierstrass theory at (P_inf, P) for a finite ramified P.

All finite totally ramified places carry the same structure, so everything
here depends only on (m, r, lambda).  The pair convention is fixed
throughout: first coordinate at P_inf, second at P.

The pure-gap floor criterion is only valid for lambda = 1 (its derivation
uses the divisor of y with unit exponents); for other lambda the dimension
oracle from :mod:`.rr` answers instead, and the two routes are swept against
each other in the tests wherever both apply.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING, Callable

from . import rr
from .gf import is_prime
from .onepoint import NumericalSemigroup, semigroup_at

if TYPE_CHECKING:  # pragma: no cover
    from .curve import KummerCurve


@dataclass(frozen=True)
class GapGraph:
    """The graph of the bijection between the gap sets at P_inf and P.

    ``pairs`` has exactly genus-many entries; the first coordinates run over
    the gaps at P_inf and the second over the gaps at P, each hit once.
    """

    pairs: tuple[tuple[int, int], ...]

    def by_first(self) -> dict[int, int]:
        return {a: b for a, b in self.pairs}

    def by_second(self) -> dict[int, int]:
        return {b: a for a, b in self.pairs}

    def to_list(self) -> list[list[int]]:
        return [[a, b] for a, b in self.pairs]


@dataclass(frozen=True)
class PureGapBox:
    """Axis-aligned rectangle of pure gaps: [beta, beta+t1] x [gamma, gamma+t2].

    Build through :func:`verified_box` (or the searches below), which check
    every lattice point; the dataclass itself carries no curve reference.
    """

    beta: int
    gamma: int
    t1: int
    t2: int

    def points(self):
        for da in range(self.t1 + 1):
            for db in range(self.t2 + 1):
                yield (self.beta + da, self.gamma + db)

    def divisor_coefficients(self) -> tuple[int, int]:
        """(a, b) with G = a*P_inf + b*P the divisor this box designs."""
        return 2 * self.beta + self.t1 - 1, 2 * self.gamma + self.t2 - 1


def gap_graph(curve: "KummerCurve") -> GapGraph:
    """Pairs (m*r - m*j - r*i, i + m*(j-1)) over the double index range,
    checked to biject the two one-point gap sets."""
    if curve.genus < 1:
        raise ValueError("gap theory needs genus >= 1")
    m, r = curve.m, curve.r
    pairs = []
    for i in range(1, m - m // r):
        for j in range(1, r - (r * i) // m):
            pairs.append((m * r - m * j - r * i, i + m * (j - 1)))
    pairs.sort()
    graph = GapGraph(tuple(pairs))
    g = curve.genus
    assert len(graph.pairs) == g, "pair count must equal the genus"
    firsts = {a for a, _ in graph.pairs}
    seconds = {b for _, b in graph.pairs}
    inf_gaps = set(semigroup_at(curve, curve.place_infinity()).gaps)
    p_gaps = set(_finite_place_semigroup(curve).gaps)
    assert firsts == inf_gaps and len(firsts) == g
    assert seconds == p_gaps and len(seconds) == g
    return graph


def _finite_place_semigroup(curve: "KummerCurve") -> NumericalSemigroup:
    # identical at every place over a root of f, rational center or not
    from .onepoint import _ramified_gaps

    return NumericalSemigroup.from_gaps(_ramified_gaps(curve.m, curve.r))


@lru_cache(maxsize=None)
def _membership_data(curve: "KummerCurve"):
    graph = gap_graph(curve)
    sem_inf = semigroup_at(curve, curve.place_infinity())
    sem_p = _finite_place_semigroup(curve)
    return graph.by_first(), graph.by_second(), sem_inf, sem_p


def is_member(curve: "KummerCurve", a: int, b: int) -> bool:
    """(a, b) in H(P_inf, P), decided through the lub closure.

    The semigroup is the set of componentwise maxima of pairs drawn from
    the gap graph together with H(P_inf) x {0} and {0} x H(P).  (a, b) is
    such a maximum iff the closure contains an element with first
    coordinate exactly a and second <= b, and one with second coordinate
    exactly b and first <= a.
    """
    if a < 0 or b < 0:
        raise ValueError("membership is defined for non-negative pairs")
    by_first, by_second, sem_inf, sem_p = _membership_data(curve)
    first_ok = (a in sem_inf) or by_first[a] <= b
    second_ok = (b in sem_p) or by_second[b] <= a
    return first_ok and second_ok


def floor_pure_gap(m: int, r: int, a: int, b: int) -> bool:
    """Pure-gap floor criterion for y**m = f(x), deg f = r (lambda = 1).

    (a, b) is a pure gap at (P_inf, P) iff for every t in [0, m) the sum
    floor((a - r*t)/m) + floor((b + t)/m) is either negative or unchanged
    when a and b both drop by one.  A zero coordinate always fails the
    t = 0 condition, matching the fact that such pairs are never pure.
    """
    if a < 0 or b < 0:
        raise ValueError("pure-gap test needs non-negative coordinates")
    for t in range(m):
        s = (a - r * t) // m + (b + t) // m
        if s < 0:
            continue
        if s == (a - 1 - r * t) // m + (b - 1 + t) // m:
            continue
        return False
    return True


def is_pure_gap(curve: "KummerCurve", a: int, b: int) -> bool:
    """Pure-gap test at (P_inf, P): the floor criterion when lambda = 1,
    the dimension oracle otherwise."""
    if curve.lam == 1:
        return floor_pure_gap(curve.m, curve.r, a, b)
    return rr.pure_gap_by_dims(curve, a, b, index=1)


def known_pure_gap(q: int, l: int) -> tuple[int, int]:
    """The pure gap (q**(l+1) - 2*q**l - 2, 1) on curves y**(q**l + 1) = f(x)
    with f separable of degree q, for prime powers q > 3.

    The returned pair is re-checked against the floor criterion before being
    handed out.
    """
    if l < 1:
        raise ValueError("l must be >= 1")
    if q <= 3 or not _is_prime_power(q):
        raise ValueError(f"q must be a prime power > 3, got {q}")
    a = q ** (l + 1) - 2 * q ** l - 2
    assert floor_pure_gap(q ** l + 1, q, a, 1)
    return (a, 1)


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return is_prime(n)


def enumerate_pure_gaps(curve: "KummerCurve", bound: int | None = None) -> tuple[tuple[int, int], ...]:
    """All pure gaps with both coordinates in [1, bound] (default 4g).

    Every pure-gap coordinate pair satisfies a + b <= 2g - 1, so any bound
    of at least 2g - 1 already captures the full set; the bound exists
    because no two-point analogue of the conductor is available.
    """
    if bound is None:
        bound = 4 * curve.genus
    if bound < 1:
        raise ValueError("bound must be >= 1")
    out = []
    if curve.lam == 1:
        m, r = curve.m, curve.r
        for a in range(1, bound + 1):
            for b in range(1, bound + 1):
                if floor_pure_gap(m, r, a, b):
                    out.append((a, b))
    else:
        dims = {}
        for a in range(bound + 1):
            for b in range(bound + 1):
                dims[(a, b)] = rr.dim(curve, rr.Divisor(a, {1: b}))
        for a in range(1, bound + 1):
            for b in range(1, bound + 1):
                if dims[(a, b)] == dims[(a - 1, b - 1)]:
                    out.append((a, b))
    return tuple(out)


def verified_box(curve: "KummerCurve", beta: int, gamma: int, t1: int, t2: int) -> PureGapBox:
    """Build a PureGapBox after checking every lattice point is a pure gap."""
    box = PureGapBox(beta, gamma, t1, t2)
    for a, b in box.points():
        if not is_pure_gap(curve, a, b):
            raise ValueError(f"({a}, {b}) is not a pure gap; rectangle rejected")
    return box


@dataclass(frozen=True)
class BoxDesign:
    """A verified box together with the code parameters it designs."""

    box: PureGapBox
    n: int
    deg_G: int
    designed_distance: int
    k: int

    def to_dict(self) -> dict:
        a, b = self.box.divisor_coefficients()
        return {
            "beta": self.box.beta,
            "gamma": self.box.gamma,
            "t1": self.box.t1,
            "t2": self.box.t2,
            "inf_coeff": a,
            "place_coeff": b,
            "degG": self.deg_G,
            "designed_d": self.designed_distance,
            "k": self.k,
        }


def _grow_box(pure: set, beta: int, gamma: int, t1_first: bool) -> tuple[int, int]:
    t1 = t2 = 0
    if t1_first:
        while (beta + t1 + 1, gamma) in pure:
            t1 += 1
        while all((beta + da, gamma + t2 + 1) in pure for da in range(t1 + 1)):
            t2 += 1
    else:
        while (beta, gamma + t2 + 1) in pure:
            t2 += 1
        while all((beta + t1 + 1, gamma + db) in pure for db in range(t2 + 1)):
            t1 += 1
    return t1, t2


def best_pure_gap_box(
    curve: "KummerCurve",
    n: int | None = None,
    objective: Callable[[BoxDesign], object] | None = None,
    bound: int | None = None,
) -> BoxDesign:
    """Search the pure-gap set for the rectangle designing the best code.

    Every pure gap seeds two greedily grown maximal rectangles (width first,
    then the transpose).  A rectangle [beta, beta+t1] x [gamma, gamma+t2]
    designs G = (2*beta+t1-1) P_inf + (2*gamma+t2-1) P with distance bound
    deg G - (2g - 2) + t1 + t2 + 2, subject to 2g - 2 < deg G < n.

    Default objective: maximize the designed distance, then the dimension
    k = n + g - 1 - deg G, then lexicographically smallest box.
    """
    if n is None:
        n = len(curve.rational_places()) - 2
    pure_list = enumerate_pure_gaps(curve, bound)
    if not pure_list:
        raise ValueError("no pure gaps found within the bound")
    pure = set(pure_list)
    g = curve.genus
    candidates: dict[PureGapBox, BoxDesign] = {}
    for beta, gamma in pure_list:
        for t1_first in (True, False):
            t1, t2 = _grow_box(pure, beta, gamma, t1_first)
            box = PureGapBox(beta, gamma, t1, t2)
            if box in candidates:
                continue
            deg_g = sum(box.divisor_coefficients())
            if not (2 * g - 2 < deg_g < n):
                continue
            designed = deg_g - (2 * g - 2) + t1 + t2 + 2
            candidates[box] = BoxDesign(
                box=box, n=n, deg_G=deg_g, designed_distance=designed,
                k=n + g - 1 - deg_g,
            )
    if not candidates:
        raise ValueError(
            "no pure-gap rectangle designs a divisor with 2g - 2 < deg G < n"
        )
    best = None
    for design in candidates.values():
        if best is None:
            best = design
            continue
        key_new = (designed_key(design, objective))
        key_old = (designed_key(best, objective))
        if key_new > key_old:
            best = design
        elif key_new == key_old and _box_tuple(design) < _box_tuple(best):
            best = design
    return best


def designed_key(design: BoxDesign, objective: Callable[[BoxDesign], object] | None):
    if objective is not None:
        return (objective(design),)
    return (design.designed_distance, design.k)


def _box_tuple(design: BoxDesign) -> tuple[int, int, int, int]:
    b = design.box
    return (b.beta, b.gamma, b.t1, b.t2)


def box_for_divisor(curve: "KummerCurve", inf_coeff: int, place_coeff: int) -> PureGapBox | None:
    """Best pure-gap rectangle matching G = inf_coeff*P_inf + place_coeff*P.

    Scans all (t1, t2) with matching parity, keeping the rectangle with the
    largest t1 + t2 whose points are all pure gaps; None when no rectangle
    fits, in which case only the plain Goppa bound applies to G.
    """
    if inf_coeff < 1 or place_coeff < 1:
        return None
    best: PureGapBox | None = None
    for t1 in range(inf_coeff + 1):
        if (inf_coeff + 1 - t1) % 2:
            continue
        beta = (inf_coeff + 1 - t1) // 2
        if beta < 1:
            continue
        for t2 in range(place_coeff + 1):
            if (place_coeff + 1 - t2) % 2:
                continue
            gamma = (place_coeff + 1 - t2) // 2
            if gamma < 1:
                continue
            box = PureGapBox(beta, gamma, t1, t2)
            if best is not None and t1 + t2 <= best.t1 + best.t2:
                continue
            if all(is_pure_gap(curve, a, b) for a, b in box.points()):
                best = box
    return best
