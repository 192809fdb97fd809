"""Exact two-phase simplex over Q with Bland's anti-cycling rule.

Solves  min c.x  subject to  A_eq x = b_eq,  A_ub x <= b_ub,  x >= 0.
Sizes here are tiny (tens of variables), so a dense tableau is fine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None


def _pivot(tab: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    p = tab[row][col]
    tab[row] = [v / p for v in tab[row]]
    for r in range(len(tab)):
        if r != row and tab[r][col] != 0:
            f = tab[r][col]
            tab[r] = [a - f * b for a, b in zip(tab[r], tab[row])]
    basis[row] = col


def _run(tab, basis, cost_row: int, allowed: int) -> str:
    """Minimize the objective stored (as reduced costs) in tab[cost_row]."""
    m = len(basis)
    while True:
        obj = tab[cost_row]
        enter = next((j for j in range(allowed) if obj[j] < 0), None)
        if enter is None:
            return "optimal"
        best = None
        for r in range(m):
            a = tab[r][enter]
            if a > 0:
                ratio = tab[r][-1] / a
                key = (ratio, basis[r])
                if best is None or key < best[0]:
                    best = (key, r)
        if best is None:
            return "unbounded"
        _pivot(tab, basis, best[1], enter)


def linprog(
    c: Sequence,
    a_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    a_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
) -> LPResult:
    n = len(c)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    n_slack = len(a_ub)
    for i, (row, b) in enumerate(zip(a_ub, b_ub)):
        slack = [Fraction(0)] * n_slack
        slack[i] = Fraction(1)
        rows.append([Fraction(x) for x in row] + slack)
        rhs.append(Fraction(b))
    for row, b in zip(a_eq, b_eq):
        rows.append([Fraction(x) for x in row] + [Fraction(0)] * n_slack)
        rhs.append(Fraction(b))
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
    m = len(rows)
    nv = n + n_slack
    if m == 0:
        if any(Fraction(x) < 0 for x in c):
            return LPResult("unbounded")
        return LPResult("optimal", tuple(Fraction(0) for _ in range(n)), Fraction(0))

    # columns: structural + slack | artificials | rhs
    tab = []
    for i in range(m):
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        tab.append(rows[i] + art + [rhs[i]])
    basis = [nv + i for i in range(m)]
    phase1 = [Fraction(0)] * (nv + m + 1)
    for i in range(m):
        phase1 = [a - b for a, b in zip(phase1, tab[i])]
    for i in range(m):
        phase1[nv + i] = Fraction(0)
    tab.append(phase1)
    _run(tab, basis, m, nv + m)
    if tab[m][-1] != 0:
        return LPResult("infeasible")

    # drive artificial variables out of the basis, dropping redundant rows
    r = 0
    while r < len(basis):
        if basis[r] >= nv:
            col = next((j for j in range(nv) if tab[r][j] != 0), None)
            if col is None:
                del tab[r]
                del basis[r]
                continue
            _pivot(tab, basis, r, col)
        r += 1
    m = len(basis)
    tab = [row[:nv] + [row[-1]] for row in tab[:m]]

    cost = [Fraction(x) for x in c] + [Fraction(0)] * n_slack + [Fraction(0)]
    for i, b in enumerate(basis):
        if cost[b] != 0:
            f = cost[b]
            cost = [a - f * v for a, v in zip(cost, tab[i])]
    tab.append(cost)
    status = _run(tab, basis, m, nv)
    if status == "unbounded":
        return LPResult("unbounded")
    x = [Fraction(0)] * nv
    for i, b in enumerate(basis):
        x[b] = tab[i][-1]
    value = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult("optimal", tuple(x[:n]), value)
