"""Exact rational geometry of centrally symmetric convex bodies."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import gcd
from typing import Iterable, Sequence, Union

from . import linalg
from .lp import linprog

Vector = tuple  # tuple of Fractions
INF = math.inf


class PolytopeError(ValueError):
    pass


class UnboundedError(PolytopeError):
    pass


def _vec(x: Iterable) -> Vector:
    return tuple(Fraction(v) for v in x)


def _dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((Fraction(x) * Fraction(y) for x, y in zip(a, b)), Fraction(0))


def frac_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Halfspace:
    """The symmetric slab {x : |normal . x| <= bound}, stored with a primitive integer normal."""

    normal: Vector
    bound: Fraction

    @classmethod
    def make(cls, normal: Iterable, bound) -> "Halfspace":
        normal = _vec(normal)
        bound = Fraction(bound)
        if not any(normal):
            raise PolytopeError("halfspace normal must be nonzero")
        if bound <= 0:
            raise PolytopeError("halfspace bound must be positive")
        den = 1
        for v in normal:
            den = den * v.denominator // gcd(den, v.denominator)
        ints = [int(v * den) for v in normal]
        g = 0
        for v in ints:
            g = gcd(g, v)
        first = next(v for v in ints if v)
        if first < 0:
            g = -g
        scale = Fraction(den, g)
        return cls(tuple(Fraction(v // g) for v in ints), abs(bound * scale))

    @property
    def dimension(self) -> int:
        return len(self.normal)

    def to_json(self) -> dict:
        return {"normal": [frac_str(v) for v in self.normal], "bound": frac_str(self.bound)}


@dataclass(frozen=True)
class HPolytope:
    dimension: int
    halfspaces: tuple[Halfspace, ...]

    def __post_init__(self):
        for h in self.halfspaces:
            if h.dimension != self.dimension:
                raise PolytopeError(
                    f"halfspace of dimension {h.dimension} in a {self.dimension}-dimensional polytope"
                )

    @classmethod
    def from_normals(cls, dimension: int, normals: Iterable[Iterable], bound=1) -> "HPolytope":
        seen: dict[Vector, Halfspace] = {}
        for n in normals:
            h = Halfspace.make(n, bound)
            # the same normal with two bounds: keep the tighter one
            if h.normal not in seen or h.bound < seen[h.normal].bound:
                seen[h.normal] = h
        return cls(dimension, tuple(seen.values()))

    def is_bounded(self) -> bool:
        if not self.halfspaces:
            return self.dimension == 0
        return linalg.rank([h.normal for h in self.halfspaces]) == self.dimension

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "halfspaces": [h.to_json() for h in self.halfspaces],
        }


@dataclass(frozen=True)
class VPolytope:
    dimension: int
    vertices: tuple[Vector, ...]

    @classmethod
    def make(cls, dimension: int, points: Iterable[Iterable]) -> "VPolytope":
        pts = sorted({_vec(p) for p in points})
        for p in pts:
            if len(p) != dimension:
                raise PolytopeError("point dimension mismatch")
        return cls(dimension, tuple(pts))

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "vertices": [[frac_str(v) for v in p] for p in self.vertices],
        }


def _check_dim(p: HPolytope, x: Sequence) -> None:
    if len(x) != p.dimension:
        raise PolytopeError(f"point of dimension {len(x)} for a {p.dimension}-dimensional polytope")


def vertices(p: HPolytope) -> VPolytope:
    """All extreme points, by solving every d-subset of the symmetric constraints exactly."""
    d = p.dimension
    if not p.is_bounded():
        raise UnboundedError("polytope is unbounded: constraint normals do not span the space")
    hs = p.halfspaces
    found: set[Vector] = set()
    for subset in combinations(range(len(hs)), d):
        a = [hs[i].normal for i in subset]
        if linalg.rank(a) < d:
            continue
        for signs in product((1, -1), repeat=d):
            b = [s * hs[i].bound for s, i in zip(signs, subset)]
            x = linalg.solve(a, b)
            if x is None:
                continue
            if all(abs(_dot(h.normal, x)) <= h.bound for h in hs):
                found.add(tuple(x))
    return VPolytope.make(d, found)


def contains(p: HPolytope, x: Sequence) -> str:
    """'interior', 'boundary' or 'outside'."""
    _check_dim(p, x)
    tight = False
    for h in p.halfspaces:
        v = abs(_dot(h.normal, x))
        if v > h.bound:
            return "outside"
        if v == h.bound:
            tight = True
    return "boundary" if tight else "interior"


def active_normals(p: HPolytope, x: Sequence) -> list[Vector]:
    return [h.normal for h in p.halfspaces if abs(_dot(h.normal, x)) == h.bound]


def is_vertex(p: HPolytope, x: Sequence) -> bool:
    _check_dim(p, x)
    if contains(p, x) != "boundary":
        return False
    return linalg.rank(active_normals(p, x)) == p.dimension


def gauge_outer(x: Sequence, functionals: Iterable) -> Fraction:
    """max |phi(x)| over the functionals (objects with ``coefficients``, or plain vectors)."""
    best = Fraction(0)
    for f in functionals:
        coeffs = getattr(f, "coefficients", f)
        best = max(best, abs(_dot(coeffs, x)))
    return best


@dataclass(frozen=True)
class GaugeCertificate:
    """x = sum weights[i] * points[i] + sum line_coeffs[j] * lines[j]; gauge = sum weights."""

    value: Union[Fraction, float]
    weights: tuple[Fraction, ...]
    points: tuple[Vector, ...]
    line_coeffs: tuple[Fraction, ...] = ()
    lines: tuple[Vector, ...] = ()

    def reconstruct(self) -> Vector | None:
        if not self.points and not self.lines:
            return None
        d = len((self.points or self.lines)[0])
        out = [Fraction(0)] * d
        for w, pt in zip(self.weights, self.points):
            out = [a + w * b for a, b in zip(out, pt)]
        for c, ln in zip(self.line_coeffs, self.lines):
            out = [a + c * b for a, b in zip(out, ln)]
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "value": "inf" if self.value == INF else frac_str(self.value),
            "terms": [
                {"weight": frac_str(w), "point": [frac_str(v) for v in pt]}
                for w, pt in zip(self.weights, self.points)
                if w
            ],
            "lines": [
                {"coefficient": frac_str(c), "direction": [frac_str(v) for v in ln]}
                for c, ln in zip(self.line_coeffs, self.lines)
                if c
            ],
        }


def gauge_inner_certificate(
    x: Sequence, v: VPolytope, lines: Sequence[Sequence] = ()
) -> GaugeCertificate:
    """Minkowski gauge of x for conv(V) + span(lines), with the optimal combination.

    Minimizes sum mu_i subject to x = sum mu_i v_i + sum (a_j - b_j) w_j,
    mu, a, b >= 0.  Infeasible means x is outside the cone: the gauge is +inf.
    """
    x = _vec(x)
    pts = list(v.vertices)
    lines = [_vec(w) for w in lines]
    d = len(x)
    nvar = len(pts) + 2 * len(lines)
    if not any(x):
        return GaugeCertificate(Fraction(0), tuple(Fraction(0) for _ in pts), tuple(pts),
                                tuple(Fraction(0) for _ in lines), tuple(lines))
    if nvar == 0:
        return GaugeCertificate(INF, (), ())
    a_eq = []
    for k in range(d):
        row = [p[k] for p in pts] + [w[k] for w in lines] + [-w[k] for w in lines]
        a_eq.append(row)
    c = [Fraction(1)] * len(pts) + [Fraction(0)] * (2 * len(lines))
    res = linprog(c, a_eq, list(x))
    if res.status != "optimal":
        return GaugeCertificate(INF, (), ())
    mu = res.x[: len(pts)]
    ab = res.x[len(pts):]
    coeffs = tuple(ab[j] - ab[len(lines) + j] for j in range(len(lines)))
    return GaugeCertificate(res.value, tuple(mu), tuple(pts), coeffs, tuple(lines))


def gauge_inner(x: Sequence, v: VPolytope, lines: Sequence[Sequence] = ()) -> Union[Fraction, float]:
    return gauge_inner_certificate(x, v, lines).value


def in_hull(x: Sequence, points: Sequence[Sequence]) -> bool:
    """Whether x is a convex combination of the points (exact LP feasibility)."""
    if not points:
        return False
    d = len(x)
    a_eq = [[Fraction(p[k]) for p in points] for k in range(d)]
    a_eq.append([Fraction(1)] * len(points))
    res = linprog([0] * len(points), a_eq, list(x) + [1])
    return res.status == "optimal"


def reduce(v: VPolytope) -> VPolytope:
    """Drop every point that is a convex combination of the others."""
    pts = list(v.vertices)
    keep = []
    for i, p in enumerate(pts):
        others = pts[:i] + pts[i + 1:]
        if not in_hull(p, others):
            keep.append(p)
    return VPolytope.make(v.dimension, keep)


def symmetric_hull(points: Iterable[Sequence]) -> VPolytope:
    """conv(+-points), reduced to its extreme points."""
    pts = [_vec(p) for p in points]
    if not pts:
        raise PolytopeError("no points")
    allpts = pts + [tuple(-a for a in p) for p in pts]
    return reduce(VPolytope.make(len(pts[0]), allpts))
