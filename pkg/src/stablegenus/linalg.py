"""Exact linear algebra over Q on nested lists of ints/Fractions."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list  # list of rows


def to_fractions(a: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in a]


def transpose(a: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*a)]


def det(a: Sequence[Sequence]) -> Fraction:
    m = to_fractions(a)
    n = len(m)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        result *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return sign * result


def rref(a: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    m = to_fractions(a)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Sequence[Sequence]) -> int:
    if not a:
        return 0
    return len(rref(a)[1])


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Unique solution of the square system a x = b, or None if singular."""
    n = len(a)
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    m, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [m[i][n] for i in range(n)]


def symmetric_signature(a: Sequence[Sequence]) -> tuple[int, int]:
    """(signature, nullity) of a rational symmetric matrix via congruence diagonalization."""
    m = to_fractions(a)
    n = len(m)
    active = list(range(n))
    pos = neg = 0
    while active:
        i = next((k for k in active if m[k][k] != 0), None)
        if i is None:
            pair = next(
                ((k, l) for k in active for l in active if k < l and m[k][l] != 0),
                None,
            )
            if pair is None:
                break
            k, l = pair
            # row/col k += row/col l turns the diagonal entry into 2 m[k][l]
            for j in range(n):
                m[k][j] += m[l][j]
            for j in range(n):
                m[j][k] += m[j][l]
            i = k
        d = m[i][i]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(i)
        for r in active:
            f = m[r][i] / d
            if f:
                for c in active:
                    m[r][c] -= f * m[i][c]
    return pos - neg, n - pos - neg


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def interpolate(xs: Sequence, ys: Sequence) -> tuple:
    """Coefficients (ascending) of the unique polynomial through the points, by Newton divided differences."""
    from . import polynomials as P

    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly: tuple = ()
    for i in range(n - 1, -1, -1):
        poly = P.add(P.mul(poly, (-xs[i], 1)), (coef[i],))
    return P._normalize(poly)
