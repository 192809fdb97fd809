from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from stablegenus.fekete import SubadditiveTable, audit_subadditive, fekete_n0, fekete_upper

F = Fraction


def test_fekete_upper_examples():
    assert fekete_upper({n: n for n in range(1, 11)}) == 1
    assert fekete_upper({1: 1, 2: 1}) == F(1, 2)
    assert fekete_upper(SubadditiveTable.from_function(lambda n: math.ceil(n / 2), 20)) == F(1, 2)


def test_fekete_n0_examples():
    assert fekete_n0(5, 10, 1) == 25
    assert fekete_n0(1, 0, F(1, 2)) == 1
    assert fekete_n0(3, F(1, 3), F(1, 7)) == math.ceil(F(14, 3) + 3)
    with pytest.raises(ValueError):
        fekete_n0(0, 1, 1)
    with pytest.raises(ValueError):
        fekete_n0(1, 1, 0)


def test_audit_examples():
    assert audit_subadditive({n: n for n in range(1, 30)}) == []
    bad = audit_subadditive({1: 1, 2: 3})
    assert bad and bad[0].kind == "sum" and (bad[0].n, bad[0].m) == (1, 1)
    assert audit_subadditive({n: math.ceil(n / 2) for n in range(1, 51)}) == []


def test_audit_flags_planted_violations():
    table = {n: math.ceil(n / 2) for n in range(1, 41)}
    table[12] = 9
    kinds = {(v.kind, v.n, v.m) for v in audit_subadditive(table)}
    assert ("sum", 1, 11) in kinds
    assert ("multiple", 2, 6) in kinds
    assert ("multiple", 4, 3) in kinds
    assert all(v.lhs > v.rhs for v in audit_subadditive(table))


def test_table_rejects_bad_values():
    with pytest.raises(ValueError):
        SubadditiveTable({1: 1, 2: 3})
    with pytest.raises(ValueError):
        SubadditiveTable({0: 1})
    with pytest.raises(ValueError):
        SubadditiveTable({1: -1})
    with pytest.raises(ValueError):
        SubadditiveTable({})


def _subadditive_table(weights: list[int], n_max: int) -> dict[int, int]:
    """f(n) = min over partitions into parts of size <= len(weights) of summed part costs."""
    f = {0: 0}
    for n in range(1, n_max + 1):
        f[n] = min(weights[k - 1] + f[n - k] for k in range(1, min(n, len(weights)) + 1))
    return f


@given(st.lists(st.integers(0, 9), min_size=1, max_size=6), st.integers(1, 12), st.sampled_from(
    [F(1), F(1, 2), F(1, 3), F(1, 10), F(2, 7)]))
def test_n0_contract_exhaustive(weights, N, eps):
    n_max = 200
    f = _subadditive_table(weights, n_max)
    table = {n: v for n, v in f.items() if n >= 1}
    assert audit_subadditive(table) == []
    L = fekete_upper(table)  # the stored minimum of f(n)/n; the true limit is no larger
    if F(table[N], N) > L + eps / 2:
        return
    B = max(f[b] for b in range(0, N))
    n0 = fekete_n0(N, B, eps)
    for n in range(max(n0, 1), n_max + 1):
        assert F(table[n], n) <= L + eps
