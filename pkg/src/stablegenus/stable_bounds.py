"""Lower and upper bounds on the stable 4-genus over a span of basis knots.

Lower bounds come from homomorphisms dominated by the 4-genus: half the
Tristram-Levine signature on every constant interval, plus tau and s/2 in the
smooth category.  Upper bounds come from a registry of known g4 values: each
fact g4(v) <= g places v/g in the unit ball, and by convexity so does the
symmetric hull of those points.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence, Union

from . import polytope as geo
from .fekete import SubadditiveTable, Violation, audit_subadditive, fekete_n0, fekete_upper
from .knot_algebra import BasisKnot, KnotExpr, format_expr, knot_from_name, sort_key
from .signatures import Functional, category_functionals

__all__ = [
    "BoundReport", "ConsistencyError", "Fact", "SubadditiveTable", "UnitBallReport",
    "UpperCertificate", "Violation", "audit_subadditive", "default_registry", "fekete_n0",
    "fekete_upper", "g_st_interval", "load_facts", "lower_bound", "unit_ball", "upper_bound",
]

SCHEMA = "stablegenus/1"
CATEGORIES = ("smooth", "topological")
Bound = Union[Fraction, float]


class ConsistencyError(AssertionError):
    """A lower bound exceeded an upper bound: the data or the code is wrong."""


def _fs(x) -> str:
    if x == math.inf:
        return "inf"
    return geo.frac_str(x)


@dataclass(frozen=True)
class Fact:
    basis: tuple[BasisKnot, ...]
    combination: tuple[int, ...]
    kind: str
    value: Fraction
    provenance: str

    def __post_init__(self):
        if self.kind not in ("g4_exact", "g4_upper"):
            raise ValueError(f"unknown fact kind {self.kind!r}")
        if len(self.basis) != len(self.combination):
            raise ValueError("basis and combination lengths differ")
        if self.value < 0:
            raise ValueError("4-genus must be nonnegative")
        if not any(self.combination):
            raise ValueError("fact combination must be nonzero")
        if self.value == 0 and self.kind != "g4_exact":
            raise ValueError("a zero-genus fact must be an exact slice statement")
        if not self.provenance.strip():
            raise ValueError("fact provenance is required")

    @property
    def expr(self) -> KnotExpr:
        return KnotExpr.from_vector(self.basis, self.combination)

    @classmethod
    def from_json(cls, d: dict) -> "Fact":
        return cls(
            tuple(knot_from_name(n) for n in d["basis"]),
            tuple(int(c) for c in d["coefficients"]),
            d["kind"],
            Fraction(d["value"]),
            d["provenance"],
        )

    def to_json(self) -> dict:
        return {
            "basis": [k.name for k in self.basis],
            "coefficients": list(self.combination),
            "kind": self.kind,
            "value": _fs(self.value),
            "provenance": self.provenance,
        }


def load_facts(path: str | Path | None = None) -> list[Fact]:
    if path is None:
        text = resources.files("stablegenus").joinpath("data/facts.json").read_text()
    else:
        text = Path(path).read_text()
    raw = json.loads(text)
    records = raw["facts"] if isinstance(raw, dict) else raw
    return [Fact.from_json(r) for r in records]


def default_registry() -> list[Fact]:
    return load_facts()


def _check_category(category: str) -> None:
    if category not in CATEGORIES:
        raise ValueError(f"category must be one of {CATEGORIES}, got {category!r}")


# -- lower bounds ----------------------------------------------------------------


def lower_bound(expr: KnotExpr, category: str = "topological") -> tuple[Fraction, Functional | None]:
    """max |phi(expr)| over the category's functionals, with the maximizing functional."""
    _check_category(category)
    if not expr.terms:
        return Fraction(0), None
    basis = expr.basis
    x = expr.vector(basis)
    best, witness = Fraction(0), None
    for f in category_functionals(basis, category):
        v = abs(f(x))
        if witness is None or v > best:
            best, witness = v, f
    return best, witness


# -- upper bounds ----------------------------------------------------------------


@dataclass(frozen=True)
class UpperCertificate:
    """expr = sum weight_i * (v_i / g_i) + sum c_j * s_j with sum |weight_i| = value."""

    value: Bound
    basis: tuple[BasisKnot, ...]
    terms: tuple[tuple[Fraction, Fact], ...] = ()
    slice_terms: tuple[tuple[Fraction, Fact], ...] = ()

    def reconstruct(self) -> KnotExpr:
        out = KnotExpr()
        for w, fact in self.terms:
            out = out + fact.expr.scale(w / fact.value)
        for c, fact in self.slice_terms:
            out = out + fact.expr.scale(c)
        return out

    def cost(self) -> Fraction:
        return sum((abs(w) for w, _ in self.terms), Fraction(0))

    def to_json(self) -> dict:
        return {
            "value": _fs(self.value),
            "terms": [
                {"weight": _fs(w), "point": format_expr(f.expr.scale(1 / f.value)),
                 "fact": f.to_json()}
                for w, f in self.terms
            ],
            "slice_terms": [
                {"coefficient": _fs(c), "fact": f.to_json()} for c, f in self.slice_terms
            ],
        }


def _working_basis(exprs: Iterable[KnotExpr]) -> tuple[BasisKnot, ...]:
    knots: set[BasisKnot] = set()
    for e in exprs:
        knots.update(e.basis)
    return tuple(sorted(knots, key=sort_key))


def upper_bound(expr: KnotExpr, registry: Sequence[Fact] | None = None) -> tuple[Bound, UpperCertificate]:
    """Gauge of expr for the symmetric hull of the registry points v/g, slice facts as free lines."""
    if registry is None:
        registry = default_registry()
    basis = _working_basis([expr] + [f.expr for f in registry])
    x = expr.vector(basis)
    positive = [f for f in registry if f.value > 0]
    slices = [f for f in registry if f.value == 0]
    points, owners = [], []
    for f in positive:
        p = tuple(c / f.value for c in f.expr.vector(basis))
        points += [p, tuple(-c for c in p)]
        owners += [(f, 1), (f, -1)]
    lines = [f.expr.vector(basis) for f in slices]
    cert = geo.gauge_inner_certificate(
        x, geo.VPolytope(len(basis), tuple(points)), lines
    )
    if cert.value == math.inf:
        return math.inf, UpperCertificate(math.inf, basis)
    weights: dict[int, Fraction] = {}
    order: list[Fact] = []
    for w, (f, sign) in zip(cert.weights, owners):
        if not w:
            continue
        key = id(f)
        if key not in weights:
            weights[key] = Fraction(0)
            order.append(f)
        weights[key] += sign * w
    terms = tuple((weights[id(f)], f) for f in order if weights[id(f)])
    slice_terms = tuple((c, f) for c, f in zip(cert.line_coeffs, slices) if c)
    return cert.value, UpperCertificate(cert.value, basis, terms, slice_terms)


# -- reports -------------------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    expr: KnotExpr
    category: str
    lower: Fraction
    upper: Bound
    lower_witness: Functional | None
    upper_witness: UpperCertificate

    @property
    def determined(self) -> bool:
        return self.lower == self.upper

    def verify(self) -> bool:
        """Re-check both witnesses against the expression."""
        if self.lower_witness is None:
            ok_lower = self.lower == 0
        else:
            basis = self.expr.basis
            ok_lower = abs(self.lower_witness(self.expr.vector(basis))) == self.lower
        if self.upper == math.inf:
            ok_upper = True
        else:
            w = self.upper_witness
            ok_upper = w.reconstruct() == self.expr and w.cost() <= self.upper
        return ok_lower and ok_upper and self.lower <= self.upper

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "expr": format_expr(self.expr),
            "category": self.category,
            "lower": _fs(self.lower),
            "upper": _fs(self.upper),
            "determined": self.determined,
            "lower_witness": None if self.lower_witness is None else self.lower_witness.to_json(),
            "upper_witness": self.upper_witness.to_json(),
        }


def g_st_interval(
    expr: KnotExpr, category: str = "topological", registry: Sequence[Fact] | None = None
) -> BoundReport:
    lo, lw = lower_bound(expr, category)
    up, uw = upper_bound(expr, registry)
    if lo > up:
        raise ConsistencyError(f"lower bound {lo} exceeds upper bound {up} for {format_expr(expr)}")
    return BoundReport(expr, category, lo, up, lw, uw)


@dataclass(frozen=True)
class UnitBallReport:
    basis: tuple[BasisKnot, ...]
    category: str
    functionals: tuple[Functional, ...]
    outer: geo.HPolytope
    outer_vertices: geo.VPolytope | None
    inner: geo.VPolytope | None
    inner_lines: tuple[tuple[Fraction, ...], ...]
    inner_facts: tuple[Fact, ...] = field(default=())

    @property
    def bounded(self) -> bool:
        return self.outer_vertices is not None

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "basis": [k.name for k in self.basis],
            "category": self.category,
            "functionals": [f.to_json() for f in self.functionals],
            "outer": {
                **self.outer.to_json(),
                "bounded": self.bounded,
                "vertices": None
                if self.outer_vertices is None
                else self.outer_vertices.to_json()["vertices"],
            },
            "inner": {
                "vertices": [] if self.inner is None else self.inner.to_json()["vertices"],
                "lines": [[_fs(v) for v in ln] for ln in self.inner_lines],
                "facts": [f.to_json() for f in self.inner_facts],
            },
        }


def unit_ball(
    basis: Sequence[BasisKnot],
    category: str = "topological",
    registry: Sequence[Fact] | None = None,
) -> UnitBallReport:
    """Outer ball from the functionals, inner hull from registry facts lying in the span."""
    _check_category(category)
    if not basis:
        raise ValueError("basis must be nonempty")
    if registry is None:
        registry = default_registry()
    basis = tuple(basis)
    d = len(basis)
    fs = tuple(category_functionals(basis, category))
    outer = geo.HPolytope.from_normals(d, [f.coefficients for f in fs])
    try:
        outer_v = geo.vertices(outer)
    except geo.UnboundedError:
        outer_v = None

    inside = [f for f in registry if set(f.expr.basis) <= set(basis)]
    pts = [tuple(c / f.value for c in f.expr.vector(basis)) for f in inside if f.value > 0]
    lines = tuple(tuple(f.expr.vector(basis)) for f in inside if f.value == 0)
    inner = geo.symmetric_hull(pts) if pts else None

    if inner is not None:
        for p in inner.vertices:
            if geo.contains(outer, p) == "outside":
                raise ConsistencyError(f"inner point {p} lies outside the outer ball")
    for ln in lines:
        if any(f(ln) != 0 for f in fs):
            raise ConsistencyError(f"slice direction {ln} is not in the kernel of every functional")
    return UnitBallReport(basis, category, fs, outer, outer_v, inner, lines, tuple(inside))
