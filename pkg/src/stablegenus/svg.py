"""Static SVG output: signature step plots and planar unit balls.

Every plotted abscissa carries its exact value in a ``data-t`` attribute
(a rational ``a/b``, or an isolating interval ``[lo, hi]`` for irrational jumps),
so the drawing can be checked without trusting pixel coordinates.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence
from xml.sax.saxutils import quoteattr

from .knot_algebra import KnotExpr, format_expr
from .polytope import frac_str
from .signatures import ExactLocation, constant_intervals

WIDTH, HEIGHT, MARGIN = 640, 360, 48


def _f(x: float) -> str:
    return f"{x:.3f}"


def _location_float(loc) -> float:
    if isinstance(loc, ExactLocation):
        return float(loc.t)
    lo, hi = loc.t_bounds()
    return float((lo + hi) / 2)


def _location_attr(loc) -> str:
    return str(loc)


def _header(title: str) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f"<title>{_escape(title)}</title>",
        '<rect width="100%" height="100%" fill="white"/>',
    ]


def _escape(s: str) -> str:
    return quoteattr(s)[1:-1]


def step_plot(expr: KnotExpr, title: str | None = None) -> str:
    """1/2 |sigma_t| on [0, 1/2] as a step graph."""
    title = title or f"1/2 |sigma_t| for {format_expr(expr)}"
    if expr.terms:
        basis = expr.basis
        vec = expr.vector(basis)
        ivs = constant_intervals(basis)
        values = [abs(sum((c * h for c, h in zip(iv.half_sigma, vec)), Fraction(0))) for iv in ivs]
    else:
        ivs, values = [], [Fraction(0)]
    jumps = [iv.lo for iv in ivs if iv.lo is not None]
    ymax = max(max(values), Fraction(1))
    pw, ph = WIDTH - 2 * MARGIN, HEIGHT - 2 * MARGIN

    def x(t: float) -> float:
        return MARGIN + 2 * t * pw

    def y(v) -> float:
        return HEIGHT - MARGIN - float(v) / float(ymax) * ph

    out = _header(title)
    out.append(
        f'<line class="axis" x1="{_f(x(0))}" y1="{_f(y(0))}" x2="{_f(x(0.5))}" y2="{_f(y(0))}" stroke="black"/>'
    )
    out.append(
        f'<line class="axis" x1="{_f(x(0))}" y1="{_f(y(0))}" x2="{_f(x(0))}" y2="{_f(y(ymax))}" stroke="black"/>'
    )
    for label, t in (("0", 0.0), ("1/4", 0.25), ("1/2", 0.5)):
        out.append(
            f'<text class="xtick" data-t="{label}" x="{_f(x(t))}" y="{_f(y(0) + 16)}" '
            f'font-size="11" text-anchor="middle">{label}</text>'
        )
    for k in range(int(ymax) + 1):
        out.append(
            f'<text class="ytick" x="{_f(x(0) - 8)}" y="{_f(y(k) + 4)}" '
            f'font-size="11" text-anchor="end">{k}</text>'
        )
    for loc in jumps:
        xt = _f(x(_location_float(loc)))
        out.append(
            f'<line class="jump" data-t="{_escape(_location_attr(loc))}" x1="{xt}" y1="{_f(y(0))}" '
            f'x2="{xt}" y2="{_f(y(ymax))}" stroke="#bbbbbb" stroke-dasharray="2,3"/>'
        )
    edges = [0.0] + [_location_float(loc) for loc in jumps] + [0.5]
    pts = []
    for k, v in enumerate(values):
        pts.append(f"{_f(x(edges[k]))},{_f(y(v))}")
        pts.append(f"{_f(x(edges[k + 1]))},{_f(y(v))}")
    out.append(f'<polyline class="graph" points="{" ".join(pts)}" fill="none" stroke="black" stroke-width="2"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _angle_sorted(points: Sequence[Sequence[Fraction]]) -> list[tuple[Fraction, Fraction]]:
    return sorted(((Fraction(p[0]), Fraction(p[1])) for p in points),
                  key=lambda p: math.atan2(float(p[1]), float(p[0])))


def polygon_plot(
    layers: Sequence[tuple[str, Sequence[Sequence[Fraction]], str]],
    title: str,
    axis_labels: tuple[str, str] = ("x", "y"),
    marks: Sequence[Sequence[Fraction]] = (),
) -> str:
    """Centrally symmetric polygons given by their vertices: layers of (css class, vertices, fill)."""
    allpts = [p for _, vs, _ in layers for p in vs] + list(marks)
    r = max([abs(float(c)) for p in allpts for c in p] + [1.0]) * 1.1
    side = min(WIDTH, HEIGHT) - 2 * MARGIN
    cx, cy = WIDTH / 2, HEIGHT / 2

    def px(p) -> str:
        return f"{_f(cx + float(p[0]) / r * side / 2)},{_f(cy - float(p[1]) / r * side / 2)}"

    out = _header(title)
    out.append(f'<line class="axis" x1="{_f(cx - side / 2)}" y1="{_f(cy)}" x2="{_f(cx + side / 2)}" y2="{_f(cy)}" stroke="black"/>')
    out.append(f'<line class="axis" x1="{_f(cx)}" y1="{_f(cy - side / 2)}" x2="{_f(cx)}" y2="{_f(cy + side / 2)}" stroke="black"/>')
    out.append(f'<text x="{_f(cx + side / 2)}" y="{_f(cy - 6)}" font-size="12" text-anchor="end">{_escape(axis_labels[0])}</text>')
    out.append(f'<text x="{_f(cx + 6)}" y="{_f(cy - side / 2 + 12)}" font-size="12">{_escape(axis_labels[1])}</text>')
    for cls, verts, fill in layers:
        if len(verts) < 2:
            continue
        ordered = _angle_sorted(verts)
        out.append(
            f'<polygon class="{cls}" points="{" ".join(px(p) for p in ordered)}" '
            f'fill="{fill}" stroke="black"/>'
        )
        for p in ordered:
            out.append(
                f'<circle class="{cls}-vertex" data-x="{frac_str(p[0])}" data-y="{frac_str(p[1])}" '
                f'cx="{px(p).split(",")[0]}" cy="{px(p).split(",")[1]}" r="2.5"/>'
            )
    for p in marks:
        a, b = px(p).split(",")
        out.append(f'<circle class="mark" data-x="{frac_str(p[0])}" data-y="{frac_str(p[1])}" cx="{a}" cy="{b}" r="3" fill="red"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
