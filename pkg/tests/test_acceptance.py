"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

from __future__ import annotations

import contextlib
import itertools
import math
import random
import time
from fractions import Fraction

import pytest

from stablegenus import polytope as geo
from stablegenus.casson_gordon import CGFamily, certify, cg_sigma, cg_threshold, construct_J, verify_certificate
from stablegenus.fekete import audit_subadditive, fekete_n0, fekete_upper
from stablegenus.knot_algebra import KnotExpr, alexander_poly, catalog, seifert_matrix_torus, torus, torus_alexander
from stablegenus.signatures import (
    evaluate,
    evaluate_stepfun,
    interval_functionals,
    max_half_abs,
    stepfun_from_seifert,
    torus_jumps,
)
from stablegenus.stable_bounds import default_registry, g_st_interval, lower_bound, unit_ball, upper_bound

F = Fraction
T27, T211, T37, T25 = torus(2, 7), torus(2, 11), torus(3, 7), torus(2, 5)


@pytest.fixture
def report(capsys):
    @contextlib.contextmanager
    def _report(number: int, title: str):
        start = time.perf_counter()
        try:
            yield
        except BaseException:
            with capsys.disabled():
                print(f"\nACCEPTANCE {number} FAIL  {title}")
            raise
        with capsys.disabled():
            print(f"\nACCEPTANCE {number} PASS  {title} ({time.perf_counter() - start:.2f}s)")

    return _report


def _sym(points):
    out = set()
    for p in points:
        p = tuple(F(x) for x in p)
        out |= {p, tuple(-x for x in p)}
    return out


def test_criterion_1_functional_list(report):
    with report(1, "interval functionals over T(2,7), T(2,11)"):
        fs = interval_functionals([T27, T211])
        got = []
        for f in fs:
            v = f.coefficients
            got.append(tuple(-x for x in v) if next(x for x in v if x) < 0 else tuple(v))
        assert got == [(0, 1), (1, 1), (1, 2), (2, 2), (2, 3), (2, 4), (3, 4), (3, 5)]


def test_criterion_2_t27_t211_ball(report):
    with report(2, "unit ball and g_st interval on span T(2,7), T(2,11)"):
        u = unit_ball([T27, T211], "topological")
        verts = set(u.outer_vertices.vertices)
        assert (F(3, 2), F(-1)) in verts and (F(-3, 2), F(1)) in verts
        p = (F(0), F(1, 5))
        assert geo.contains(u.outer, p) == "boundary"
        assert geo.is_vertex(u.outer, p) is False
        r = g_st_interval(KnotExpr.from_vector([T27, T211], [3, -2]))
        assert (r.lower, r.upper) == (2, 2) and r.determined


def test_criterion_3_four_dimensional_ball(report):
    listed = [
        (2, -1, 0, 0), (0, 1, -2, 0), (0, 1, 0, -1), (2, -1, 0, -1), (0, 0, 1, 0), (2, 0, -1, 0),
        (0, 1, 0, -2),
        (2, 1, -2, -2), (2, 1, -2, -1), (0, 1, -2, 1), (0, 0, 1, -2), (2, 0, -1, -2),
    ]
    with report(3, "24 vertices of the signature ball on span 3_1, 5_1, 5_2, 6_2"):
        basis = [catalog(n) for n in ("3_1", "5_1", "5_2", "6_2")]
        u = unit_ball(basis, "topological")
        assert all(f.kind == "signature" for f in u.functionals)
        verts = set(u.outer_vertices.vertices)
        assert len(verts) == 24
        want = _sym(listed)
        matches = [
            s for s in itertools.product((1, -1), repeat=4)
            if {tuple(si * x for si, x in zip(s, v)) for v in verts} == want
        ]
        assert matches
        assert {(F(2), F(-1), F(0), F(0)), (F(0), F(1), F(0), F(-2))} <= {
            tuple(si * x for si, x in zip(matches[0], v)) for v in verts
        }


def test_criterion_4_smooth_versus_topological(report):
    with report(4, "T(3,7): signature 5, value 4 at 1/2, tau 6; (1/5,0) separates the balls"):
        x = KnotExpr.of(T37)
        assert max_half_abs(x) == 5
        assert abs(evaluate(x, F(1, 2))) / 2 == 4
        val, w = lower_bound(x, "smooth")
        assert val == 6 and w.kind == "tau"
        top = unit_ball([T37, T25], "topological")
        smooth = unit_ball([T37, T25], "smooth")
        p = (F(1, 5), F(0))
        assert geo.contains(top.outer, p) != "outside"
        assert geo.contains(smooth.outer, p) == "outside"


def test_criterion_5_oracle_equivalence(report):
    with report(5, "Seifert path equals closed form on six torus knots; Alexander formula"):
        rng = random.Random(20240601)
        for p, q in [(2, 3), (2, 5), (2, 7), (2, 11), (3, 5), (3, 7)]:
            closed = torus_jumps(p, q)
            v = seifert_matrix_torus(p, q)
            via_matrix = stepfun_from_seifert(v)
            for _ in range(100):
                d = rng.randint(2, 1000)
                t = F(rng.randint(1, d - 1), d)
                assert evaluate_stepfun(closed, t) == evaluate_stepfun(via_matrix, t), (p, q, t)
            assert alexander_poly(v).coeffs == torus_alexander(p, q)


def test_criterion_6_casson_gordon(report):
    with report(6, "Casson-Gordon threshold, construction, certificate and verifier"):
        eps = F(1, 2)
        assert cg_threshold(eps) == 6
        j = construct_J(eps)
        cert = certify(eps, j)
        assert all(s >= 6 for s in cert.sevenths)
        assert cert.valid
        ok, problems = verify_certificate(cert.to_json())
        assert ok, problems
        example = certify(eps, KnotExpr.of(T27, -3))
        assert example.sevenths == (6, 12, 18) and example.valid
        assert cg_sigma(CGFamily.balanced(j), (0, 0)) == 0


def _subadditive(weights, n_max):
    f = {0: 0}
    for n in range(1, n_max + 1):
        f[n] = min(weights[k - 1] + f[n - k] for k in range(1, min(n, len(weights)) + 1))
    return f


def test_criterion_7_fekete(report):
    with report(7, "Fekete bound, n0 contract up to n = 200, planted violations"):
        assert fekete_upper({n: math.ceil(n / 2) for n in range(1, 21)}) == F(1, 2)
        rng = random.Random(7)
        checked = 0
        for _ in range(60):
            weights = [rng.randint(0, 9) for _ in range(rng.randint(1, 6))]
            f = _subadditive(weights, 200)
            table = {n: v for n, v in f.items() if n >= 1}
            assert audit_subadditive(table) == []
            L = fekete_upper(table)
            for eps in (F(1), F(1, 2), F(1, 10)):
                for N in range(1, 13):
                    if F(table[N], N) > L + eps / 2:
                        continue
                    n0 = fekete_n0(N, max(f[b] for b in range(N)), eps)
                    assert all(F(table[n], n) <= L + eps for n in range(n0, 201))
                    checked += 1
        assert checked > 100
        planted = {n: math.ceil(n / 2) for n in range(1, 31)}
        planted[10] = 8
        found = {(v.kind, v.n, v.m) for v in audit_subadditive(planted)}
        assert ("sum", 1, 9) in found and ("multiple", 2, 5) in found


def test_criterion_8_seminorm_suite(report):
    with report(8, "seminorm properties on 500 random expressions over the shipped bases"):
        registry = default_registry()
        bases = [[T27, T211], [T37, T25], [catalog(n) for n in ("3_1", "5_1", "5_2", "6_2")]]
        rng = random.Random(8)

        def rand_expr(basis):
            return KnotExpr.from_vector(basis, [F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in basis])

        for i in range(500):
            basis = bases[i % 3]
            category = ("topological", "smooth")[i % 2]
            x, y = rand_expr(basis), rand_expr(basis)
            c = F(rng.randint(-6, 6), rng.randint(1, 3))
            lx = lower_bound(x, category)[0]
            assert lower_bound(x.scale(c), category)[0] == abs(c) * lx
            assert lower_bound(x + y, category)[0] <= lx + lower_bound(y, category)[0]
            assert lower_bound(x.mirror(), category)[0] == lx
            ux = upper_bound(x, registry)[0]
            assert upper_bound(x.mirror(), registry)[0] == ux
            assert lx <= ux
            if i % 10 == 0:
                uy = upper_bound(y, registry)[0]
                assert upper_bound(x + y, registry)[0] <= ux + uy
                if ux != math.inf:
                    assert upper_bound(x.scale(c), registry)[0] == abs(c) * ux
