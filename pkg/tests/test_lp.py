from __future__ import annotations

from fractions import Fraction

import numpy as np
import scipy.optimize
from hypothesis import given, strategies as st

from stablegenus.lp import linprog

ints = st.integers(-3, 3)


@st.composite
def lp_instances(draw):
    n = draw(st.integers(1, 4))
    m_eq = draw(st.integers(0, 2))
    m_ub = draw(st.integers(0, 3))
    c = draw(st.lists(ints, min_size=n, max_size=n))
    a_eq = draw(st.lists(st.lists(ints, min_size=n, max_size=n), min_size=m_eq, max_size=m_eq))
    b_eq = draw(st.lists(ints, min_size=m_eq, max_size=m_eq))
    a_ub = draw(st.lists(st.lists(ints, min_size=n, max_size=n), min_size=m_ub, max_size=m_ub))
    b_ub = draw(st.lists(st.integers(0, 5), min_size=m_ub, max_size=m_ub))
    return c, a_eq, b_eq, a_ub, b_ub


@given(lp_instances())
def test_status_and_value_match_scipy(inst):
    c, a_eq, b_eq, a_ub, b_ub = inst
    ours = linprog(c, a_eq, b_eq, a_ub, b_ub)
    ref = scipy.optimize.linprog(
        c,
        A_eq=np.array(a_eq, dtype=float) if a_eq else None,
        b_eq=np.array(b_eq, dtype=float) if a_eq else None,
        A_ub=np.array(a_ub, dtype=float) if a_ub else None,
        b_ub=np.array(b_ub, dtype=float) if a_ub else None,
        bounds=[(0, None)] * len(c),
        method="highs",
    )
    expected = {0: "optimal", 2: "infeasible", 3: "unbounded"}[ref.status]
    assert ours.status == expected
    if expected == "optimal":
        assert abs(float(ours.value) - ref.fun) < 1e-7
        x = ours.x
        assert all(v >= 0 for v in x)
        for row, b in zip(a_eq, b_eq):
            assert sum(Fraction(a) * v for a, v in zip(row, x)) == b
        for row, b in zip(a_ub, b_ub):
            assert sum(Fraction(a) * v for a, v in zip(row, x)) <= b


def test_degenerate_redundant_equalities():
    res = linprog([1, 1], [[1, 1], [2, 2]], [2, 4])
    assert res.status == "optimal" and res.value == 2


def test_no_constraints():
    assert linprog([1, 2]).value == 0
    assert linprog([-1]).status == "unbounded"
