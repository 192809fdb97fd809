"""Basis knots, Seifert matrices and formal rational combinations of knots.

A :class:`KnotExpr` is an element of the rationalized concordance group
spanned by a handful of basis knots.  Torus knots are always stored in their
positive form; the mirror image is the negative coefficient.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import gcd
from typing import Iterable, Mapping, Union

from . import linalg
from . import polynomials as P


class KnotError(ValueError):
    """Invalid knot parameters or unknown catalog entries."""


@dataclass(frozen=True)
class SeifertMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise KnotError("Seifert matrix must be square")
        if n % 2:
            raise KnotError(f"Seifert matrix must have even size, got {n}")
        if n and abs(linalg.det(self.skew())) != 1:
            raise KnotError("V - V^T is not unimodular")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "SeifertMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return self.size // 2

    def transpose(self) -> list[list[int]]:
        return linalg.transpose(self.entries)

    def skew(self) -> list[list[int]]:
        t = self.transpose()
        return [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, t)]

    def symmetrized(self) -> list[list[int]]:
        t = self.transpose()
        return [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, t)]

    def mirror(self) -> "SeifertMatrix":
        return SeifertMatrix.from_rows([[-x for x in row] for row in self.transpose()])

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


@dataclass(frozen=True, order=True)
class TorusKnot:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise KnotError(f"torus parameters must be >= 2, got ({self.p},{self.q})")
        if gcd(self.p, self.q) != 1:
            raise KnotError(f"T({self.p},{self.q}): parameters not coprime")
        if self.p > self.q:
            raise KnotError("use torus() for non-canonical parameter order")

    @property
    def name(self) -> str:
        return f"T({self.p},{self.q})"

    def seifert(self) -> SeifertMatrix:
        return seifert_matrix_torus(self.p, self.q)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class CatalogKnot:
    name: str
    seifert_matrix: SeifertMatrix = field(compare=False, hash=False, repr=False)

    def seifert(self) -> SeifertMatrix:
        return self.seifert_matrix

    def __str__(self) -> str:
        return self.name


BasisKnot = Union[TorusKnot, CatalogKnot]


def sort_key(k: BasisKnot):
    if isinstance(k, TorusKnot):
        return (0, k.p, k.q, "")
    return (1, 0, 0, k.name)


def torus(p: int, q: int) -> TorusKnot:
    p, q = int(p), int(q)
    if p > q:
        p, q = q, p
    return TorusKnot(p, q)


def _bidiagonal(n: int) -> list[list[int]]:
    """Variation matrix of z^n: 1 on the diagonal, -1 on the superdiagonal, size n - 1."""
    m = [[0] * (n - 1) for _ in range(n - 1)]
    for i in range(n - 1):
        m[i][i] = 1
        if i + 1 < n - 1:
            m[i][i + 1] = -1
    return m


def _kron(a, b) -> list[list[int]]:
    return [
        [x * y for x in ra for y in rb]
        for ra in a
        for rb in b
    ]


@lru_cache(maxsize=None)
def seifert_matrix_torus(p: int, q: int) -> SeifertMatrix:
    """Seifert matrix of the fiber surface of the positive torus knot T(p,q).

    The fiber is the join of p and q points, so its Seifert form is the tensor
    product of the two bidiagonal variation matrices; the overall sign makes
    positive torus knots have negative signature.
    """
    k = torus(p, q)
    return SeifertMatrix.from_rows(
        [[-x for x in row] for row in _kron(_bidiagonal(k.p), _bidiagonal(k.q))]
    )


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial sum coeffs[i] * t^(low + i)."""

    low: int
    coeffs: tuple[int, ...]

    def as_polynomial(self) -> tuple[int, ...]:
        """Coefficients after multiplying by t^(-low), ascending degree."""
        return self.coeffs

    def __str__(self) -> str:
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if c == 0:
                continue
            e = self.low + i
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def alexander_poly(v: SeifertMatrix) -> LaurentPoly:
    """det(V - t V^T), normalized with symmetric exponents and positive lowest coefficient."""
    n = v.size
    if n == 0:
        return LaurentPoly(0, (1,))
    vt = v.transpose()
    xs = list(range(n + 1))
    ys = [
        linalg.det([[a - x * b for a, b in zip(r, s)] for r, s in zip(v.entries, vt)])
        for x in xs
    ]
    poly = [int(c) for c in linalg.interpolate(xs, ys)]
    shift = 0
    while poly and poly[0] == 0:
        poly.pop(0)
        shift += 1
    if not poly:
        raise KnotError("degenerate Seifert matrix: Alexander polynomial vanishes")
    if poly[0] < 0:
        poly = [-c for c in poly]
    span = len(poly) - 1
    return LaurentPoly(-(span // 2), tuple(poly))


def torus_alexander(p: int, q: int) -> tuple[int, ...]:
    """(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), ascending coefficients."""
    def tn(n):
        return (-1,) + (0,) * (n - 1) + (1,)

    num = P.mul(tn(p * q), tn(1))
    den = P.mul(tn(p), tn(q))
    quo = P.exact_divide(num, den)
    assert quo is not None
    return tuple(int(c) for c in quo)


# -- catalog -----------------------------------------------------------------

CATALOG_NAMES = ("3_1", "4_1", "5_1", "5_2", "6_2")


@lru_cache(maxsize=1)
def _catalog() -> dict[str, BasisKnot]:
    raw = json.loads(
        resources.files("stablegenus").joinpath("data/catalog.json").read_text()
    )
    out: dict[str, BasisKnot] = {}
    for entry in raw["knots"]:
        if "torus" in entry:
            knot: BasisKnot = torus(*entry["torus"])
            v = knot.seifert()
        else:
            v = SeifertMatrix.from_rows(entry["seifert"])
            knot = CatalogKnot(entry["name"], v)
        _verify_entry(entry, v)
        out[entry["name"]] = knot
    return out


def _verify_entry(entry: Mapping, v: SeifertMatrix) -> None:
    alex = alexander_poly(v)
    if list(alex.coeffs) != list(entry["alexander"]):
        raise KnotError(
            f"catalog {entry['name']}: Alexander polynomial {alex} does not match table"
        )
    sig, _ = linalg.symmetric_signature(v.symmetrized())
    if abs(sig) != entry["abs_signature"]:
        raise KnotError(f"catalog {entry['name']}: |signature| {abs(sig)} does not match table")


def catalog(name: str) -> BasisKnot:
    try:
        return _catalog()[name]
    except KeyError:
        raise KnotError(f"unknown catalog knot {name!r}") from None


# -- expressions ---------------------------------------------------------------


@dataclass(frozen=True)
class KnotExpr:
    """Finite formal combination sum c_i K_i with nonzero rational coefficients."""

    terms: tuple[tuple[BasisKnot, Fraction], ...] = ()

    @classmethod
    def from_terms(cls, items: Iterable[tuple[BasisKnot, object]]) -> "KnotExpr":
        acc: dict[BasisKnot, Fraction] = {}
        for knot, c in items:
            acc[knot] = acc.get(knot, Fraction(0)) + Fraction(c)
        kept = sorted(((k, c) for k, c in acc.items() if c != 0), key=lambda kc: sort_key(kc[0]))
        return cls(tuple(kept))

    @classmethod
    def of(cls, knot: BasisKnot, coeff=1) -> "KnotExpr":
        return cls.from_terms([(knot, coeff)])

    def as_dict(self) -> dict[BasisKnot, Fraction]:
        return dict(self.terms)

    @property
    def basis(self) -> list[BasisKnot]:
        return [k for k, _ in self.terms]

    def coefficient(self, knot: BasisKnot) -> Fraction:
        return self.as_dict().get(knot, Fraction(0))

    def vector(self, basis: Iterable[BasisKnot]) -> list[Fraction]:
        basis = list(basis)
        d = self.as_dict()
        missing = set(d) - set(basis)
        if missing:
            raise KnotError(f"expression uses knots outside the basis: {sorted(map(str, missing))}")
        return [d.get(k, Fraction(0)) for k in basis]

    @classmethod
    def from_vector(cls, basis: Iterable[BasisKnot], coeffs: Iterable) -> "KnotExpr":
        return cls.from_terms(zip(basis, coeffs))

    def __add__(self, other: "KnotExpr") -> "KnotExpr":
        return KnotExpr.from_terms(self.terms + other.terms)

    def __neg__(self) -> "KnotExpr":
        return self.scale(-1)

    def __sub__(self, other: "KnotExpr") -> "KnotExpr":
        return self + (-other)

    def scale(self, c) -> "KnotExpr":
        c = Fraction(c)
        return KnotExpr.from_terms((k, c * x) for k, x in self.terms)

    def __rmul__(self, c) -> "KnotExpr":
        return self.scale(c)

    def mirror(self) -> "KnotExpr":
        return -self

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return format_expr(self)


def add(x: KnotExpr, y: KnotExpr) -> KnotExpr:
    return x + y


def scale(c, x: KnotExpr) -> KnotExpr:
    return x.scale(c)


def mirror(x: KnotExpr) -> KnotExpr:
    return x.mirror()


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_expr(x: KnotExpr) -> str:
    if not x.terms:
        return "0"
    parts = []
    for i, (k, c) in enumerate(x.terms):
        mag = abs(c)
        body = k.name if mag == 1 else f"{_format_coeff(mag)}*{k.name}"
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


_TORUS_RE = re.compile(r"^T\(\s*(\d+)\s*,\s*(\d+)\s*\)$")


def knot_from_name(name: str) -> BasisKnot:
    """Resolve 'T(p,q)' or a catalog name such as '5_2'."""
    m = _TORUS_RE.match(name.strip())
    if m:
        return torus(int(m.group(1)), int(m.group(2)))
    return catalog(name.strip())
