from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction

from stablegenus.knot_algebra import KnotExpr, catalog, torus
from stablegenus.signatures import merged_jumps
from stablegenus.svg import polygon_plot, step_plot

NS = "{http://www.w3.org/2000/svg}"


def _jump_attrs(svg: str) -> list[str]:
    root = ET.fromstring(svg)
    return [el.get("data-t") for el in root.iter(f"{NS}line") if el.get("class") == "jump"]


def test_step_plot_abscissas_are_the_union_jump_set():
    x = KnotExpr.from_vector([torus(2, 7), torus(2, 11)], [3, -2])
    svg = step_plot(x)
    got = [Fraction(a) for a in _jump_attrs(svg)]
    want = [loc.t for loc, _ in merged_jumps(x.basis)]
    assert got == want
    assert got == sorted(Fraction(n, d) for n, d in
                         [(1, 22), (1, 14), (3, 22), (3, 14), (5, 22), (7, 22), (5, 14), (9, 22)])


def test_step_plot_pixel_positions_track_the_rationals():
    x = KnotExpr.of(torus(2, 7))
    root = ET.fromstring(step_plot(x))
    lines = [el for el in root.iter(f"{NS}line") if el.get("class") == "jump"]
    xs = [float(el.get("x1")) for el in lines]
    ts = [float(Fraction(el.get("data-t"))) for el in lines]
    slope = (xs[1] - xs[0]) / (ts[1] - ts[0])
    for px, t in zip(xs, ts):
        assert abs(px - (xs[0] + slope * (t - ts[0]))) < 1e-2


def test_isolated_jumps_are_labelled_by_intervals():
    attrs = _jump_attrs(step_plot(KnotExpr.of(catalog("5_2"))))
    assert len(attrs) == 1 and attrs[0].startswith("[")
    lo, hi = (Fraction(s.strip()) for s in attrs[0].strip("[]").split(","))
    assert lo < hi


def test_step_plot_deterministic_and_empty():
    x = KnotExpr.of(torus(3, 7))
    assert step_plot(x) == step_plot(x)
    ET.fromstring(step_plot(KnotExpr()))


def test_polygon_plot_vertices_carry_exact_coordinates():
    verts = [(Fraction(3, 2), Fraction(-1)), (Fraction(-3, 2), Fraction(1)), (Fraction(1, 3), Fraction(0)),
             (Fraction(-1, 3), Fraction(0))]
    root = ET.fromstring(polygon_plot([("outer", verts, "#ddd")], "t", marks=[(Fraction(1, 5), 0)]))
    got = {(c.get("data-x"), c.get("data-y")) for c in root.iter(f"{NS}circle") if c.get("class") == "outer-vertex"}
    assert got == {("3/2", "-1"), ("-3/2", "1"), ("1/3", "0"), ("-1/3", "0")}
