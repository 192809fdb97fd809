from __future__ import annotations

from fractions import Fraction

import numpy as np
from hypothesis import given, strategies as st

from stablegenus import linalg

small_square = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)
)


@given(small_square)
def test_det_matches_numpy(a):
    assert abs(float(linalg.det(a)) - np.linalg.det(np.array(a, dtype=float))) < 1e-6


@given(small_square)
def test_symmetric_signature_matches_eigenvalues(a):
    n = len(a)
    s = [[a[i][j] + a[j][i] for j in range(n)] for i in range(n)]
    sig, nullity = linalg.symmetric_signature(s)
    ev = np.linalg.eigvalsh(np.array(s, dtype=float))
    assert sig == int((ev > 1e-9).sum() - (ev < -1e-9).sum())
    assert nullity == int((abs(ev) <= 1e-9).sum())


def test_signature_with_zero_diagonal():
    assert linalg.symmetric_signature([[0, 1], [1, 0]]) == (0, 0)
    assert linalg.symmetric_signature([[0, 0], [0, 0]]) == (0, 2)


@given(small_square, st.lists(st.integers(-5, 5), min_size=5, max_size=5))
def test_solve_roundtrip(a, b):
    n = len(a)
    b = b[:n]
    x = linalg.solve(a, b)
    if linalg.rank(a) < n:
        assert x is None
    else:
        assert [sum(Fraction(a[i][j]) * x[j] for j in range(n)) for i in range(n)] == b


def test_interpolate_recovers_polynomial():
    xs = [0, 1, 2, 3]
    ys = [2 - x + 3 * x**3 for x in xs]
    assert tuple(linalg.interpolate(xs, ys)) == (2, -1, 0, 3)
