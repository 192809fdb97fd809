from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np
import pytest
import scipy.optimize
from hypothesis import given, strategies as st
from scipy.spatial import ConvexHull

from stablegenus import polytope as geo

F = Fraction


def _hull_vertices_numeric(normals, bound=1.0):
    """Vertices of {|n.x| <= bound} by brute force over float intersections."""
    d = len(normals[0])
    rows = [np.array(n, dtype=float) for n in normals]
    found = set()
    for idx in itertools.combinations(range(len(rows)), d):
        a = np.array([rows[i] for i in idx])
        if abs(np.linalg.det(a)) < 1e-12:
            continue
        for signs in itertools.product((1, -1), repeat=d):
            x = np.linalg.solve(a, np.array(signs, dtype=float) * bound)
            if all(abs(r @ x) <= bound + 1e-9 for r in rows):
                found.add(tuple(round(v, 9) for v in x))
    return found


normal_lists = st.integers(2, 3).flatmap(
    lambda d: st.lists(
        st.lists(st.integers(-3, 3), min_size=d, max_size=d).filter(any), min_size=d, max_size=6
    )
)


@given(normal_lists)
def test_vertex_enumeration_matches_brute_force(normals):
    d = len(normals[0])
    p = geo.HPolytope.from_normals(d, normals)
    if not p.is_bounded():
        with pytest.raises(geo.UnboundedError):
            geo.vertices(p)
        return
    ours = {tuple(round(float(v), 9) for v in x) for x in geo.vertices(p).vertices}
    assert ours == _hull_vertices_numeric(normals)


@given(normal_lists)
def test_vertices_are_extreme_points_of_their_hull(normals):
    d = len(normals[0])
    p = geo.HPolytope.from_normals(d, normals)
    if not p.is_bounded():
        return
    vs = geo.vertices(p).vertices
    pts = np.array([[float(c) for c in v] for v in vs])
    hull = ConvexHull(pts)
    assert len(hull.vertices) == len(vs)
    for v in vs:
        assert geo.is_vertex(p, v)


def test_halfspace_normalization():
    h = geo.Halfspace.make([F(-2), F(4)], 2)
    assert h.normal == (1, -2) and h.bound == 1
    with pytest.raises(geo.PolytopeError):
        geo.Halfspace.make([0, 0], 1)


def test_contains_and_is_vertex_on_a_square():
    sq = geo.HPolytope.from_normals(2, [(1, 0), (0, 1)])
    assert geo.contains(sq, (0, 0)) == "interior"
    assert geo.contains(sq, (1, F(1, 2))) == "boundary"
    assert geo.contains(sq, (2, 0)) == "outside"
    assert geo.is_vertex(sq, (1, -1))
    assert not geo.is_vertex(sq, (1, 0))
    with pytest.raises(geo.PolytopeError):
        geo.contains(sq, (0, 0, 0))


def test_gauges_on_a_square():
    sq_funcs = [(1, 0), (0, 1)]
    assert geo.gauge_outer((3, -5), sq_funcs) == 5
    v = geo.VPolytope.make(2, [(1, 1), (1, -1), (-1, 1), (-1, -1)])
    assert geo.gauge_inner((3, -5), v) == 5


points_2d = st.lists(
    st.tuples(st.integers(-4, 4), st.integers(-4, 4)).filter(any), min_size=1, max_size=4
)


@given(points_2d, st.tuples(st.integers(-6, 6), st.integers(-6, 6)))
def test_inner_gauge_matches_scipy_lp(points, x):
    hull = geo.symmetric_hull(points)
    cert = geo.gauge_inner_certificate(x, hull)
    pts = np.array([[float(c) for c in p] for p in hull.vertices]).T
    ref = scipy.optimize.linprog(
        np.ones(pts.shape[1]), A_eq=pts, b_eq=np.array(x, dtype=float),
        bounds=[(0, None)] * pts.shape[1], method="highs",
    )
    if ref.status == 2:
        assert cert.value == geo.INF
    else:
        assert abs(float(cert.value) - ref.fun) < 1e-7
        assert cert.reconstruct() == tuple(F(c) for c in x)
        assert sum(cert.weights) == cert.value


def test_lines_are_free_in_the_gauge():
    v = geo.VPolytope.make(2, [(1, 0), (-1, 0)])
    assert geo.gauge_inner((0, 5), v) == geo.INF
    cert = geo.gauge_inner_certificate((2, 5), v, lines=[(0, 1)])
    assert cert.value == 2 and cert.line_coeffs == (5,)


def test_symmetric_hull_reduces_interior_points():
    h = geo.symmetric_hull([(2, 0), (0, 2), (1, 1), (F(1, 2), 0)])
    assert set(h.vertices) == {(2, 0), (-2, 0), (0, 2), (0, -2)}
