"""Dense linear algebra over the prime field F_p, on lists of int rows."""

from __future__ import annotations

from typing import Sequence

Matrix = list[list[int]]


def check_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not prime")


def inv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("no inverse of 0")
    return pow(a, p - 2, p)


def reduce(m: Sequence[Sequence[int]], p: int) -> Matrix:
    return [[int(x) % p for x in row] for row in m]


def rref(m: Sequence[Sequence[int]], p: int) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form with zero rows dropped, and the pivot columns."""
    a = reduce(m, p)
    if not a:
        return [], []
    ncols = len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        k = inv(a[r][c], p)
        a[r] = [x * k % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(m: Sequence[Sequence[int]], p: int) -> int:
    return len(rref(m, p)[1])


def kernel(m: Sequence[Sequence[int]], p: int, ncols: int | None = None) -> Matrix:
    """Basis of {x : m x = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(m[0])
    r, pivots = rref(m, p) if m else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(r, pivots):
            v[pc] = -row[f] % p
        basis.append(v)
    return basis


def matvec(m: Sequence[Sequence[int]], v: Sequence[int], p: int) -> list[int]:
    return [sum(a * b for a, b in zip(row, v)) % p for row in m]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], p: int) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % p for col in bt] for row in a]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def shift(m: Sequence[Sequence[int]], lam: int, p: int) -> Matrix:
    """m - lam * I."""
    return [[(x - lam * (i == j)) % p for j, x in enumerate(row)] for i, row in enumerate(m)]


def intersect(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], p: int, n: int) -> Matrix:
    """Basis of span(a) ∩ span(b) in F_p^n (rows are spanning vectors)."""
    if not a or not b:
        return []
    # x in both iff x = sum s_i a_i = sum t_j b_j; solve [A^T | -B^T] (s, t) = 0
    cols = [list(r) for r in a] + [[-x % p for x in r] for r in b]
    system = [[c[k] for c in cols] for k in range(n)]
    out = []
    for sol in kernel(system, p, len(cols)):
        s = sol[: len(a)]
        out.append([sum(si * row[k] for si, row in zip(s, a)) % p for k in range(n)])
    return rref(out, p)[0] if out else []
