"""Tristram-Levine signature step functions and the linear functionals they induce.

Sign convention: positive torus knots have non-positive signature functions,
so sigma(T(2,3)) = -2.

Jump locations live on (0, 1/2].  A jump at a root of unity is an exact
rational; any other unit-circle root of the Alexander polynomial is carried as
an isolating interval for z = 2 cos(2 pi t), a root of an integer polynomial,
and refined on demand.  Values between jumps are exact integer signatures of
the Hermitian pencil evaluated at a rational point of the unit circle.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

from mpmath import iv

from . import linalg
from . import polynomials as P
from .knot_algebra import (
    BasisKnot,
    CatalogKnot,
    KnotExpr,
    SeifertMatrix,
    TorusKnot,
    alexander_poly,
    torus,
)

DEFAULT_PRECISION_BITS = 256
HALF = Fraction(1, 2)


class PrecisionError(RuntimeError):
    """Root separation needed more bits than the configured cap."""


# -- certified cosines -------------------------------------------------------


def _raw_to_fraction(raw) -> Fraction:
    sign, man, exp, _ = raw
    if not man:
        return Fraction(0)
    val = Fraction(int(man)) * (Fraction(2) ** exp)
    return -val if sign else val


def z_enclosure(t: Fraction, prec: int) -> tuple[Fraction, Fraction]:
    """Rational bounds lo <= 2 cos(2 pi t) <= hi, certified by interval arithmetic."""
    t = Fraction(t)
    saved = iv.prec
    iv.prec = prec
    try:
        val = 2 * iv.cos(2 * iv.pi * iv.mpf(t.numerator) / t.denominator)
        lo, hi = val._mpi_
    finally:
        iv.prec = saved
    return _raw_to_fraction(lo), _raw_to_fraction(hi)


def z_of_u(u: Fraction) -> Fraction:
    """2 cos(2 pi t) when u = tan(pi t)."""
    u2 = u * u
    return 2 * (1 - u2) / (1 + u2)


# -- jump locations ------------------------------------------------------------


@dataclass(frozen=True)
class ExactLocation:
    t: Fraction

    def __str__(self) -> str:
        return _frac_str(self.t)

    def to_json(self) -> str:
        return str(self)


class IsolatedLocation:
    """A unit-circle root t in (0, 1/2) known through z = 2cos(2 pi t).

    ``zpoly`` is squarefree with exactly one root in the open interval
    (zlo, zhi), or ``zlo == zhi`` is the root itself.  Refinement tightens the
    enclosure in place; the root it denotes never changes.
    """

    __slots__ = ("zpoly", "zlo", "zhi")

    def __init__(self, zpoly: tuple, zlo: Fraction, zhi: Fraction):
        self.zpoly = zpoly
        self.zlo = Fraction(zlo)
        self.zhi = Fraction(zhi)

    def refine(self) -> None:
        self.zlo, self.zhi = P.refine_root(self.zpoly, self.zlo, self.zhi)

    def width(self) -> Fraction:
        return self.zhi - self.zlo

    def t_bounds(self, width: Fraction = Fraction(1, 10**6)) -> tuple[Fraction, Fraction]:
        """Rational lo < t < hi around the root, found by Stern-Brocot search on certified cosines."""
        lo, hi = Fraction(0), HALF
        for _ in range(400):
            if hi - lo <= width:
                break
            mid = Fraction(lo.numerator + hi.numerator, lo.denominator + hi.denominator)
            zl, zh = z_enclosure(mid, 128)
            if zl > self.zhi:
                lo = mid
            elif zh < self.zlo:
                hi = mid
            elif self.zlo < self.zhi:
                self.refine()
            else:
                break
        return lo, hi

    def __str__(self) -> str:
        lo, hi = self.t_bounds()
        return f"[{_frac_str(lo)}, {_frac_str(hi)}]"

    def to_json(self) -> str:
        return str(self)

    def __repr__(self) -> str:
        return f"IsolatedLocation(z in ({self.zlo}, {self.zhi}))"


JumpLocation = Union[ExactLocation, IsolatedLocation]


def _frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _same_root(a: IsolatedLocation, b: IsolatedLocation) -> bool:
    g = P.poly_gcd(a.zpoly, b.zpoly)
    if P.degree(g) < 1:
        return False
    if a.zlo == a.zhi:
        r = a.zlo
        inside = r == b.zlo if b.zlo == b.zhi else b.zlo < r < b.zhi
        return inside and P.evaluate(g, r) == 0
    if b.zlo == b.zhi:
        return _same_root(b, a)
    lo, hi = max(a.zlo, b.zlo), min(a.zhi, b.zhi)
    if lo >= hi:
        return False
    return P.count_open(P.squarefree(g), lo, hi) > 0


def compare_locations(a: JumpLocation, b: JumpLocation, cap_bits: int = DEFAULT_PRECISION_BITS) -> int:
    """Order two jump locations by t: -1, 0 or 1."""
    if isinstance(a, ExactLocation) and isinstance(b, ExactLocation):
        return (a.t > b.t) - (a.t < b.t)
    if isinstance(a, IsolatedLocation) and isinstance(b, IsolatedLocation):
        if a is b or _same_root(a, b):
            return 0
    prec = 64
    cap = Fraction(1, 2**cap_bits)
    while True:
        alo, ahi = _z_bounds(a, prec)
        blo, bhi = _z_bounds(b, prec)
        # z decreases as t increases on (0, 1/2]
        if ahi < blo:
            return 1
        if bhi < alo:
            return -1
        progressed = False
        for loc in (a, b):
            if isinstance(loc, IsolatedLocation) and loc.width() > cap:
                loc.refine()
                progressed = True
        if prec < cap_bits:
            prec = min(2 * prec, cap_bits)
            progressed = True
        if not progressed:
            raise PrecisionError(
                f"cannot separate jump locations {a} and {b} within {cap_bits} bits"
            )


def _z_bounds(loc: JumpLocation, prec: int) -> tuple[Fraction, Fraction]:
    if isinstance(loc, ExactLocation):
        return z_enclosure(loc.t, prec)
    return loc.zlo, loc.zhi


def compare_t(t: Fraction, loc: JumpLocation, cap_bits: int = DEFAULT_PRECISION_BITS) -> int:
    return compare_locations(ExactLocation(Fraction(t)), loc, cap_bits)


# -- step functions --------------------------------------------------------------


@dataclass(frozen=True)
class Jump:
    location: JumpLocation
    delta: int


@dataclass(frozen=True)
class StepFunction:
    """Signature function on (0, 1/2]: zero near 0, jumping by ``delta`` at each location."""

    jumps: tuple[Jump, ...]

    def values(self) -> list[int]:
        """Value on each open interval: before the first jump, after each jump."""
        out = [0]
        for j in self.jumps:
            out.append(out[-1] + j.delta)
        return out

    def negated(self) -> "StepFunction":
        return StepFunction(tuple(Jump(j.location, -j.delta) for j in self.jumps))

    def to_json(self) -> list[dict]:
        return [{"location": j.location.to_json(), "delta": j.delta} for j in self.jumps]


def torus_jumps(p: int, q: int) -> StepFunction:
    """Closed-form signature jumps of the positive torus knot T(p,q).

    Each pair 1 <= i < p, 1 <= j < q gives x = i/p + j/q; the jump sits at
    x mod 1 when that lies in (0, 1/2], and is +2 for x < 1, -2 for x > 1.
    """
    k = torus(p, q)
    acc: dict[Fraction, int] = {}
    for i in range(1, k.p):
        for j in range(1, k.q):
            x = Fraction(i, k.p) + Fraction(j, k.q)
            loc, delta = (x, 2) if x < 1 else (x - 1, -2)
            if 0 < loc <= HALF:
                acc[loc] = acc.get(loc, 0) + delta
    return StepFunction(
        tuple(Jump(ExactLocation(t), d) for t, d in sorted(acc.items()) if d)
    )


def hermitian_pencil_signature(v: SeifertMatrix, u: Fraction) -> int:
    """Exact sigma_t(V) at the circle point with tan(pi t) = u > 0.

    (1 - w)V + (1 - conj w)V^T is a positive multiple of u(V + V^T) - i(V - V^T);
    its real doubling [[uS, A], [-A, uS]] has twice the signature.
    """
    u = Fraction(u)
    if u <= 0:
        raise ValueError("u must be positive")
    s = v.symmetrized()
    a = v.skew()
    n = v.size
    big = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            big[i][j] = u * s[i][j]
            big[n + i][n + j] = u * s[i][j]
            big[i][n + j] = Fraction(a[i][j])
            big[n + i][j] = Fraction(-a[i][j])
    sig, _ = linalg.symmetric_signature(big)
    return sig // 2


def signature_at_half(v: SeifertMatrix) -> int:
    sig, _ = linalg.symmetric_signature(v.symmetrized())
    return sig


def _u_in_gap(zlo: Fraction, zhi: Fraction) -> Fraction:
    """A rational u > 0 with zlo < z(u) < zhi (z(u) = 2cos(2 pi t), u = tan(pi t))."""
    lo, hi = Fraction(0), Fraction(1)
    while z_of_u(hi) >= zhi:
        lo, hi = hi, hi * 2
    while True:
        z = z_of_u(hi)
        if zlo < z < zhi:
            return hi
        mid = (lo + hi) / 2
        zm = z_of_u(mid)
        if zlo < zm < zhi:
            return mid
        if zm >= zhi:
            lo = mid
        else:
            hi = mid


def _sorted_locations(locs: list[JumpLocation], cap_bits: int) -> list[JumpLocation]:
    cmp = functools.partial(compare_locations, cap_bits=cap_bits)
    return sorted(locs, key=functools.cmp_to_key(cmp))


def unit_circle_roots(v: SeifertMatrix) -> tuple[list[Fraction], list[IsolatedLocation], bool]:
    """Split the Alexander roots on the upper unit circle into roots of unity and the rest.

    Returns (exact t values in (0, 1/2), isolated roots, whether t = 1/2 is a root).
    """
    coeffs = alexander_poly(v).as_polynomial()
    deg = len(coeffs) - 1
    rest: tuple = tuple(coeffs)
    orders = []
    n = 2
    # phi(n) >= sqrt(n/2) bounds the cyclotomic orders that can divide
    while n <= 2 * deg * deg + 2:
        phi = _totient(n)
        if phi <= P.degree(rest):
            quo = P.exact_divide(rest, P.cyclotomic(n))
            if quo is not None:
                orders.append(n)
                rest = quo
                while (quo := P.exact_divide(rest, P.cyclotomic(n))) is not None:
                    rest = quo
        n += 1
    exact = sorted(
        {Fraction(k, n) for n in orders if n > 2 for k in range(1, n // 2 + 1) if gcd(k, n) == 1}
    )
    isolated: list[IsolatedLocation] = []
    if P.degree(rest) > 0:
        zpoly = P.squarefree(P.laurent_to_z([int(c) for c in rest]))
        for lo, hi in P.isolate_real_roots(zpoly, -2, 2):
            isolated.append(IsolatedLocation(zpoly, lo, hi))
    return exact, isolated, 2 in orders


def _totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def stepfun_from_seifert(v: SeifertMatrix, cap_bits: int = DEFAULT_PRECISION_BITS) -> StepFunction:
    exact, isolated, half_is_root = unit_circle_roots(v)
    locs = _sorted_locations(
        [ExactLocation(t) for t in exact] + list(isolated), cap_bits
    )
    # gap k lies between locs[k-1] and locs[k] (t = 0 and t = 1/2 at the ends)
    values = []
    prec = 64
    for k in range(len(locs) + 1):
        while True:
            upper = Fraction(2) if k == 0 else _z_bounds(locs[k - 1], prec)[0]
            lower = Fraction(-2) if k == len(locs) else _z_bounds(locs[k], prec)[1]
            if lower < upper:
                break
            progressed = False
            for loc in (locs[k - 1] if k else None, locs[k] if k < len(locs) else None):
                if isinstance(loc, IsolatedLocation) and loc.width() > Fraction(1, 2**cap_bits):
                    loc.refine()
                    progressed = True
            if prec < cap_bits:
                prec = min(2 * prec, cap_bits)
                progressed = True
            if not progressed:
                raise PrecisionError("cannot find a sample point between adjacent jumps")
        values.append(hermitian_pencil_signature(v, _u_in_gap(lower, upper)))
    jumps = []
    for k, loc in enumerate(locs):
        delta = values[k + 1] - values[k]
        if delta:
            jumps.append(Jump(loc, delta))
    if half_is_root:
        delta = signature_at_half(v) - values[-1]
        if delta:
            jumps.append(Jump(ExactLocation(HALF), delta))
    return StepFunction(tuple(jumps))


@functools.lru_cache(maxsize=None)
def knot_stepfun(knot: BasisKnot) -> StepFunction:
    if isinstance(knot, TorusKnot):
        return torus_jumps(knot.p, knot.q)
    return stepfun_from_seifert(knot.seifert())


# -- evaluation --------------------------------------------------------------------


def _fold(t) -> Fraction:
    t = Fraction(t) % 1
    return 1 - t if t > HALF else t


def evaluate_stepfun(sf: StepFunction, t, cap_bits: int = DEFAULT_PRECISION_BITS) -> Fraction:
    """Two-sided averaged value sigma'_t of a step function at rational t."""
    t = _fold(t)
    if t == 0:
        return Fraction(0)
    total = Fraction(0)
    for j in sf.jumps:
        c = compare_t(t, j.location, cap_bits)
        if c > 0:
            total += j.delta
        elif c == 0 and t != HALF:
            total += Fraction(j.delta, 2)
    return total


def evaluate(expr: KnotExpr, t, cap_bits: int = DEFAULT_PRECISION_BITS) -> Fraction:
    """sum x_i sigma'_t(K_i) for the combination sum x_i K_i."""
    return sum(
        (c * evaluate_stepfun(knot_stepfun(k), t, cap_bits) for k, c in expr.terms),
        Fraction(0),
    )


def sigma_sevenths(j: KnotExpr) -> tuple[Fraction, Fraction, Fraction]:
    """(sigma'_{1/7}, sigma'_{2/7}, sigma'_{3/7}); sigma'_{4/7} equals the last by symmetry."""
    return tuple(evaluate(j, Fraction(a, 7)) for a in (1, 2, 3))  # type: ignore[return-value]


# -- functionals ---------------------------------------------------------------


@dataclass(frozen=True)
class Functional:
    label: str
    coefficients: tuple[Fraction, ...]
    kind: str = "signature"

    def __call__(self, vec: Sequence) -> Fraction:
        return sum((c * Fraction(x) for c, x in zip(self.coefficients, vec)), Fraction(0))

    def negated(self) -> "Functional":
        return Functional(self.label, tuple(-c for c in self.coefficients), self.kind)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "kind": self.kind,
            "coefficients": [_frac_str(c) for c in self.coefficients],
        }


@dataclass(frozen=True)
class _Interval:
    lo: JumpLocation | None
    hi: JumpLocation | None
    half_sigma: tuple[Fraction, ...]

    def label(self, index: int) -> str:
        lo = "0" if self.lo is None else str(self.lo)
        hi = "1/2" if self.hi is None else str(self.hi)
        return f"interval {index}: ({lo}, {hi})"


def merged_jumps(
    basis: Sequence[BasisKnot], cap_bits: int = DEFAULT_PRECISION_BITS
) -> list[tuple[JumpLocation, list[int]]]:
    """Union of the basis jump locations in (0, 1/2), sorted, with per-knot deltas."""
    slots: list[tuple[JumpLocation, list[int]]] = []
    for i, knot in enumerate(basis):
        for j in knot_stepfun(knot).jumps:
            if isinstance(j.location, ExactLocation) and j.location.t == HALF:
                continue
            lo, hi = 0, len(slots)
            placed = False
            while lo < hi:
                mid = (lo + hi) // 2
                c = compare_locations(j.location, slots[mid][0], cap_bits)
                if c == 0:
                    slots[mid][1][i] += j.delta
                    placed = True
                    break
                if c < 0:
                    hi = mid
                else:
                    lo = mid + 1
            if not placed:
                deltas = [0] * len(basis)
                deltas[i] = j.delta
                slots.insert(lo, (j.location, deltas))
    return slots


def constant_intervals(
    basis: Sequence[BasisKnot], cap_bits: int = DEFAULT_PRECISION_BITS
) -> list[_Interval]:
    """Maximal open intervals of (0, 1/2) on which every basis signature is constant."""
    slots = merged_jumps(basis, cap_bits)
    current = [0] * len(basis)
    out = [_Interval(None, slots[0][0] if slots else None, tuple(Fraction(0) for _ in basis))]
    for k, (loc, deltas) in enumerate(slots):
        current = [a + b for a, b in zip(current, deltas)]
        nxt = slots[k + 1][0] if k + 1 < len(slots) else None
        out.append(_Interval(loc, nxt, tuple(Fraction(x, 2) for x in current)))
    return out


def interval_functionals(
    basis: Sequence[BasisKnot], cap_bits: int = DEFAULT_PRECISION_BITS
) -> list[Functional]:
    """One functional (1/2 sigma_t(K_i))_i per constant interval, deduplicated up to sign."""
    if not basis:
        raise ValueError("basis must be nonempty")
    out: list[Functional] = []
    seen: set[tuple[Fraction, ...]] = set()
    for idx, iv_ in enumerate(constant_intervals(basis, cap_bits)):
        vec = iv_.half_sigma
        if not any(vec):
            continue
        key = _sign_canonical(vec)
        if key in seen:
            continue
        seen.add(key)
        out.append(Functional(iv_.label(idx), vec))
    return out


def _sign_canonical(vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
    first = next((x for x in vec if x), 0)
    return tuple(-x for x in vec) if first < 0 else tuple(vec)


def dedupe_functionals(fs: Iterable[Functional]) -> list[Functional]:
    out, seen = [], set()
    for f in fs:
        key = _sign_canonical(f.coefficients)
        if any(key) and key not in seen:
            seen.add(key)
            out.append(f)
    return out


def max_half_abs(expr: KnotExpr, cap_bits: int = DEFAULT_PRECISION_BITS) -> Fraction:
    """max over t of 1/2 |sigma_t(expr)|, the best signature lower bound for g_st."""
    if not expr.terms:
        return Fraction(0)
    basis = expr.basis
    vec = expr.vector(basis)
    best = Fraction(0)
    for iv_ in constant_intervals(basis, cap_bits):
        val = abs(sum((c * x for c, x in zip(iv_.half_sigma, vec)), Fraction(0)))
        best = max(best, val)
    return best


# -- tau and s ---------------------------------------------------------------------


def tau_torus(p: int, q: int) -> int:
    k = torus(p, q)
    return (k.p - 1) * (k.q - 1) // 2


def s_torus(p: int, q: int) -> int:
    return 2 * tau_torus(p, q)


def smooth_functionals(basis: Sequence[BasisKnot]) -> list[Functional]:
    """tau and s/2 functionals; available only when every basis knot is a torus knot."""
    if not all(isinstance(k, TorusKnot) for k in basis):
        return []
    tau = tuple(Fraction(tau_torus(k.p, k.q)) for k in basis)
    s_half = tuple(Fraction(s_torus(k.p, k.q), 2) for k in basis)
    return [Functional("tau", tau, "tau"), Functional("s/2", s_half, "s")]


def category_functionals(basis: Sequence[BasisKnot], category: str) -> list[Functional]:
    if category not in ("smooth", "topological"):
        raise ValueError(f"unknown category {category!r}")
    return list(_category_functionals(tuple(basis), category))


@functools.lru_cache(maxsize=256)
def _category_functionals(basis: tuple[BasisKnot, ...], category: str) -> tuple[Functional, ...]:
    fs = interval_functionals(basis)
    if category == "smooth":
        fs = fs + smooth_functionals(basis)
    return tuple(dedupe_functionals(fs))


# -- export ------------------------------------------------------------------------


def expr_step_table(expr: KnotExpr) -> list[tuple[str, str, Fraction]]:
    """Rows (t_lo, t_hi, sigma) over the constant intervals of a combination."""
    if not expr.terms:
        return [("0", "1/2", Fraction(0))]
    basis = expr.basis
    vec = expr.vector(basis)
    rows = []
    for iv_ in constant_intervals(basis):
        val = 2 * sum((c * x for c, x in zip(iv_.half_sigma, vec)), Fraction(0))
        lo = "0" if iv_.lo is None else str(iv_.lo)
        hi = "1/2" if iv_.hi is None else str(iv_.hi)
        rows.append((lo, hi, val))
    return rows


__all__ = [
    "CatalogKnot",
    "DEFAULT_PRECISION_BITS",
    "ExactLocation",
    "Functional",
    "IsolatedLocation",
    "Jump",
    "PrecisionError",
    "StepFunction",
    "category_functionals",
    "evaluate",
    "evaluate_stepfun",
    "hermitian_pencil_signature",
    "interval_functionals",
    "knot_stepfun",
    "max_half_abs",
    "s_torus",
    "sigma_sevenths",
    "smooth_functionals",
    "stepfun_from_seifert",
    "tau_torus",
    "torus_jumps",
]
