"""Subadditive sequences and certified bounds on their limits f(n)/n."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union


@dataclass(frozen=True)
class Violation:
    kind: str  # "sum": f(n+m) > f(n)+f(m);  "multiple": f(nm) > n f(m)
    n: int
    m: int
    lhs: Fraction
    rhs: Fraction

    def __str__(self) -> str:
        if self.kind == "sum":
            return f"f({self.n}+{self.m}) = {self.lhs} > f({self.n}) + f({self.m}) = {self.rhs}"
        return f"f({self.n}*{self.m}) = {self.lhs} > {self.n}*f({self.m}) = {self.rhs}"


def _values(table) -> dict[int, Fraction]:
    raw = table.values if isinstance(table, SubadditiveTable) else table
    return {int(n): Fraction(v) for n, v in raw.items()}


def audit_subadditive(table: Union["SubadditiveTable", Mapping]) -> list[Violation]:
    f = _values(table)
    out: list[Violation] = []
    keys = sorted(f)
    for i, n in enumerate(keys):
        for m in keys[i:]:
            if n + m in f and f[n + m] > f[n] + f[m]:
                out.append(Violation("sum", n, m, f[n + m], f[n] + f[m]))
    for m in keys:
        for n in range(2, keys[-1] // m + 1):
            if n * m in f and f[n * m] > n * f[m]:
                out.append(Violation("multiple", n, m, f[n * m], n * f[m]))
    return out


@dataclass(frozen=True)
class SubadditiveTable:
    """Finitely many values f(n) >= 0 of a subadditive function on the positive integers."""

    values: Mapping[int, Fraction]

    def __post_init__(self):
        vals = _values(self.values)
        if not vals:
            raise ValueError("empty table")
        if any(n < 1 for n in vals):
            raise ValueError("table indices must be positive integers")
        if any(v < 0 for v in vals.values()):
            raise ValueError("table values must be nonnegative")
        object.__setattr__(self, "values", dict(sorted(vals.items())))
        bad = audit_subadditive(vals)
        if bad:
            raise ValueError(f"table is not subadditive: {bad[0]}")

    @classmethod
    def from_function(cls, f, n_max: int) -> "SubadditiveTable":
        return cls({n: Fraction(f(n)) for n in range(1, n_max + 1)})


def fekete_upper(table: Union[SubadditiveTable, Mapping]) -> Fraction:
    """min f(n)/n over the stored n: an upper bound for lim f(n)/n."""
    f = _values(table)
    if not f:
        raise ValueError("empty table")
    return min(Fraction(v) / n for n, v in f.items())


def fekete_n0(N: int, B, eps) -> int:
    """Smallest integer n0 >= 2B/eps + N.

    If f(N)/N <= L + eps/2 and f(b) <= B for 0 <= b < N, then f(n)/n <= L + eps
    for every n >= n0.
    """
    B, eps = Fraction(B), Fraction(eps)
    if N < 1 or B < 0 or eps <= 0:
        raise ValueError("need N >= 1, B >= 0, eps > 0")
    return math.ceil(2 * B / eps + N)
