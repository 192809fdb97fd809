"""Casson-Gordon lower bounds for the satellite family K(J1, J2).

The 3-fold branched cover of K(J1, J2) has first homology Z_7 + Z_7, split by
the deck transformation into its 2- and 4-eigenspaces.  Characters on one
axis have signature given by three Tristram-Levine values of the companion
at sevenths.  Combined with Gilmer's bound, large enough sevenths values force
g_st(K(J, -J)) close to 1/2; a certificate records that argument symbolically
in the multiplicity n, so no large connected sum is ever built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import fp
from .fekete import fekete_upper
from .knot_algebra import KnotExpr, format_expr, knot_from_name, torus
from .signatures import evaluate, sigma_sevenths

P = 7
EIGENVALUES = (2, 4)


class CGError(ValueError):
    pass


class SearchExhausted(CGError):
    def __init__(self, message: str, best: KnotExpr | None, best_sevenths: tuple | None):
        super().__init__(message)
        self.best = best
        self.best_sevenths = best_sevenths


# -- F_p subspaces and the deck action --------------------------------------------


@dataclass(frozen=True)
class FpSubspace:
    p: int
    ambient: int
    basis: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        fp.check_prime(self.p)
        for row in self.basis:
            if len(row) != self.ambient:
                raise CGError("basis vector has the wrong length")
        r, _ = fp.rref(self.basis, self.p) if self.basis else ([], [])
        if [tuple(x) for x in r] != list(self.basis):
            raise CGError("basis must be in reduced row echelon form; use FpSubspace.span")

    @classmethod
    def span(cls, p: int, ambient: int, vectors: Sequence[Sequence[int]]) -> "FpSubspace":
        r, _ = fp.rref(vectors, p) if vectors else ([], [])
        return cls(p, ambient, tuple(tuple(x) for x in r))

    @classmethod
    def whole(cls, p: int, ambient: int) -> "FpSubspace":
        return cls.span(p, ambient, fp.identity(ambient))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[int]) -> bool:
        if not self.basis:
            return not any(x % self.p for x in v)
        return fp.rank(list(self.basis) + [list(v)], self.p) == self.dim

    def intersect(self, other: "FpSubspace") -> "FpSubspace":
        rows = fp.intersect(self.basis, other.basis, self.p, self.ambient)
        return FpSubspace.span(self.p, self.ambient, rows)

    def elements(self):
        """Every vector of the subspace (p^dim of them)."""
        for coeffs in _all_vectors(self.p, self.dim):
            yield tuple(
                sum(c * row[k] for c, row in zip(coeffs, self.basis)) % self.p
                for k in range(self.ambient)
            )


def _all_vectors(p: int, n: int):
    if n == 0:
        yield ()
        return
    for head in range(p):
        for tail in _all_vectors(p, n - 1):
            yield (head,) + tail


@dataclass(frozen=True)
class DeckAction:
    """Order-3 deck transformation acting on column vectors over F_p."""

    p: int
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.matrix)
        if any(len(r) != n for r in self.matrix):
            raise CGError("deck matrix must be square")
        object.__setattr__(self, "matrix", tuple(tuple(x % self.p for x in r) for r in self.matrix))
        d = [list(r) for r in self.matrix]
        if fp.matmul(fp.matmul(d, d, self.p), d, self.p) != fp.identity(n):
            raise CGError("deck matrix must satisfy D^3 = I")

    @classmethod
    def standard(cls, copies: int = 1) -> "DeckAction":
        """diag(2, 4, 2, 4, ...) over F_7: the action on copies of Z_7 + Z_7."""
        diag = [EIGENVALUES[i % 2] for i in range(2 * copies)]
        return cls(P, tuple(tuple(diag[i] * (i == j) for j in range(len(diag))) for i in range(len(diag))))

    @property
    def size(self) -> int:
        return len(self.matrix)

    def apply(self, v: Sequence[int]) -> list[int]:
        return fp.matvec(self.matrix, v, self.p)

    def eigenspace(self, lam: int) -> FpSubspace:
        k = fp.kernel(fp.shift(self.matrix, lam, self.p), self.p, self.size)
        return FpSubspace.span(self.p, self.size, k)


def split_invariant(h: FpSubspace, d: DeckAction) -> tuple[FpSubspace, FpSubspace]:
    """H = H2 + H4 for a deck-invariant subspace H over F_7."""
    if h.p != P or d.p != P:
        raise CGError("eigenspace splitting is only set up for p = 7")
    if h.ambient != d.size:
        raise CGError("subspace and deck action have different ambient dimensions")
    for row in h.basis:
        if not h.contains(d.apply(row)):
            raise CGError("not invariant: D maps H outside itself")
    h2 = h.intersect(d.eigenspace(2))
    h4 = h.intersect(d.eigenspace(4))
    if h2.dim + h4.dim != h.dim:
        raise CGError(
            f"unexpected eigenstructure: dim H2 + dim H4 = {h2.dim} + {h4.dim} != {h.dim}"
        )
    return h2, h4


def max_support_vector(h: FpSubspace) -> tuple[int, ...]:
    """A vector of H with at least dim H nonzero coordinates.

    The sum of the rref rows is nonzero at every pivot column, since each pivot
    column has a single 1 among the rows.
    """
    if h.dim == 0:
        raise CGError("subspace is zero")
    return tuple(sum(col) % h.p for col in zip(*h.basis))


def support(v: Sequence[int]) -> int:
    return sum(1 for x in v if x)


# -- Gilmer arithmetic ---------------------------------------------------------


def gilmer_dim(n: int, g) -> Fraction:
    """Lower bound n - 2g on the dimension of the vanishing-character subspace."""
    g = Fraction(g)
    if n < 1 or g < 0:
        raise CGError("need n >= 1 and g >= 0")
    return n - 2 * g


def gilmer_bound(g) -> Fraction:
    """|sigma(K, chi)| <= 6g on that subspace."""
    g = Fraction(g)
    if g < 0:
        raise CGError("need g >= 0")
    return 6 * g


# -- the satellite family ----------------------------------------------------------


@dataclass(frozen=True)
class CGFamily:
    j1: KnotExpr
    j2: KnotExpr
    n: int = 1

    @classmethod
    def balanced(cls, j: KnotExpr, n: int = 1) -> "CGFamily":
        """K(J, -nJ)."""
        if n < 1:
            raise CGError("n must be >= 1")
        return cls(j, j.scale(-n), n)


def _three_term(j: KnotExpr, a: int) -> Fraction:
    return sum((evaluate(j, Fraction(k * a % P, P)) for k in (1, 2, 4)), Fraction(0))


def cg_sigma(family: CGFamily, character: tuple[int, int]) -> Fraction:
    """Signature of the character chi_{a,b}; only the two axes are available."""
    a, b = (int(x) % P for x in character)
    if a and b:
        raise CGError(f"formula not available for mixed character chi_{{{a},{b}}}")
    if a:
        return _three_term(family.j1, a)
    if b:
        return _three_term(family.j2, b)
    return Fraction(0)


def cg_threshold(eps) -> Fraction:
    eps = Fraction(eps)
    if not 0 < eps < 1:
        raise CGError(f"eps must lie in (0, 1), got {eps}")
    return 6 * (1 - eps) / eps


def _candidates(max_k: int, max_multiplicity: int):
    """Combinations of mirrored T(2,k), ordered by total multiplicity, then singles, then k."""
    ks = list(range(3, max_k + 1, 2))
    for total in range(1, max_multiplicity + 1):
        for k in ks:
            yield KnotExpr.of(torus(2, k), -total)
        for k1, k2 in combinations(ks, 2):
            for m1 in range(1, total):
                yield KnotExpr.from_terms([(torus(2, k1), -m1), (torus(2, k2), -(total - m1))])


def construct_J(eps, max_k: int = 15, max_multiplicity: int = 5) -> KnotExpr:
    """Smallest combination of mirrored (2,k) torus knots whose sevenths all reach the threshold."""
    m = cg_threshold(eps)
    best, best_s = None, None
    for j in _candidates(max_k, max_multiplicity):
        s = sigma_sevenths(j)
        if min(s) >= m:
            return j
        if best_s is None or min(s) > min(best_s):
            best, best_s = j, s
    raise SearchExhausted(
        f"search exhausted (k <= {max_k}, multiplicity <= {max_multiplicity}) for threshold {m}",
        best,
        best_s,
    )


# -- certificates --------------------------------------------------------------------


def _fs(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# g4(K(J,-J)) <= 1 and g4(2K(J,-J)) <= 1 for every J
FAMILY_GENUS = {1: Fraction(1), 2: Fraction(1)}


@dataclass(frozen=True)
class CGCertificate:
    eps: Fraction
    J: KnotExpr
    sevenths: tuple[Fraction, Fraction, Fraction]
    threshold: Fraction
    verdict: str
    transcript: tuple[str, ...]
    lower: Fraction
    upper: Fraction
    failing: str | None = None
    upper_source: dict = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return self.verdict == "valid"

    def to_json(self) -> dict:
        return {
            "schema": "stablegenus/1",
            "kind": "casson-gordon",
            "eps": _fs(self.eps),
            "J": format_expr(self.J),
            "J_terms": [{"knot": k.name, "coefficient": _fs(c)} for k, c in self.J.terms],
            "sevenths": [_fs(v) for v in self.sevenths],
            "threshold": _fs(self.threshold),
            "verdict": self.verdict,
            "failing": self.failing,
            "bounds": [_fs(self.lower), _fs(self.upper)],
            "upper_source": {str(n): _fs(g) for n, g in self.upper_source.items()},
            "transcript": list(self.transcript),
        }


def _transcript(eps: Fraction, m: Fraction, sevenths, valid: bool) -> list[str]:
    g_rate = (1 - eps) / 2
    low = min(sevenths)
    return [
        f"assume g_st(K) < {_fs(g_rate)}; then g4(nK) < {_fs(g_rate)}*n for some n >= 1",
        "H1(M_3(nK); Z) = (Z_7)^(2n), and the deck transformation acts by 2 and 4 on the two eigen-axes",
        f"Gilmer: a deck-invariant subspace H of characters with dim H > n - 2*{_fs(g_rate)}*n = {_fs(eps)}*n "
        f"and |sigma(nK, chi)| <= 6*g4(nK) < {_fs(6 * g_rate)}*n for chi in H",
        f"H = H2 + H4, so one summand has dim > {_fs(eps / 2)}*n; "
        "the H4 case replaces J by -J, which gives the same condition up to sign",
        f"that summand holds a character with more than {_fs(eps / 2)}*n nonzero coordinates, "
        "each contributing sigma_{a/7}(J) with a in {1,2,3}",
        "sevenths of J: " + ", ".join(f"sigma_{a}/7 = {_fs(v)}" for a, v in zip((1, 2, 3), sevenths)),
        f"|sigma(nK, chi)| > {_fs(eps / 2)}*n*{_fs(low)} = {_fs(eps * low / 2)}*n",
        f"contradiction iff {_fs(eps / 2)}*{_fs(low)} >= {_fs(6 * g_rate)}, "
        f"i.e. min sigma = {_fs(low)} >= M = 6(1-eps)/eps = {_fs(m)}: {'holds' if valid else 'fails'}",
        f"upper bound: g4(2K) <= 1, so g_st(K) <= {_fs(fekete_upper(FAMILY_GENUS))}",
        (f"conclusion: {_fs(g_rate)} <= g_st(K(J,-J)) <= 1/2" if valid
         else "conclusion: no lower bound from this J"),
    ]


def certify(eps, j: KnotExpr) -> CGCertificate:
    eps = Fraction(eps)
    m = cg_threshold(eps)
    s = sigma_sevenths(j)
    failing = None
    for a, v in zip((1, 2, 3), s):
        if v < m:
            failing = f"sigma_{a}/7(J) = {_fs(v)} < M = {_fs(m)}"
            break
    valid = failing is None
    upper = fekete_upper(FAMILY_GENUS)
    return CGCertificate(
        eps=eps,
        J=j,
        sevenths=s,
        threshold=m,
        verdict="valid" if valid else "invalid",
        transcript=tuple(_transcript(eps, m, s, valid)),
        lower=(1 - eps) / 2 if valid else Fraction(0),
        upper=upper,
        failing=failing,
        upper_source=dict(FAMILY_GENUS),
    )


def verify_certificate(data: dict) -> tuple[bool, list[str]]:
    """Re-check a serialized certificate from scratch; returns (ok, problems)."""
    problems: list[str] = []
    try:
        eps = Fraction(data["eps"])
        j = KnotExpr.from_terms(
            (knot_from_name(t["knot"]), Fraction(t["coefficient"])) for t in data["J_terms"]
        )
        claimed = [Fraction(v) for v in data["sevenths"]]
        m = Fraction(data["threshold"])
        lo, up = (Fraction(v) for v in data["bounds"])
        verdict = data["verdict"]
        table = {int(n): Fraction(g) for n, g in data["upper_source"].items()}
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        return False, [f"malformed certificate: {exc}"]
    if not 0 < eps < 1:
        problems.append(f"eps {eps} outside (0, 1)")
        return False, problems
    if m != cg_threshold(eps):
        problems.append(f"threshold {m} != 6(1-eps)/eps = {cg_threshold(eps)}")
    actual = list(sigma_sevenths(j))
    if actual != claimed:
        problems.append(f"sevenths {claimed} do not match recomputed {actual}")
    valid = min(actual) >= cg_threshold(eps) and eps * min(actual) >= 6 * (1 - eps)
    if verdict != ("valid" if valid else "invalid"):
        problems.append(f"verdict {verdict!r} is wrong")
    if valid and lo != (1 - eps) / 2:
        problems.append(f"lower bound {lo} != (1-eps)/2")
    if not valid and lo != 0:
        problems.append("invalid certificate claims a lower bound")
    if table.get(2) is None or up != fekete_upper(table):
        problems.append("upper bound does not follow from the recorded genus table")
    if lo > up:
        problems.append("lower bound exceeds upper bound")
    return not problems, problems


def variant_bounds(n: int) -> tuple[Fraction, Fraction]:
    """Asserted interval [(n-1)/n, n/(n+1)] for g_st(K(J, -nJ)); not derived here."""
    if n < 1:
        raise CGError("n must be >= 1")
    return Fraction(n - 1, n), Fraction(n, n + 1)
