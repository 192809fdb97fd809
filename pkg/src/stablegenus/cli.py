"""Command-line entry point: ``stablegenus <command> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import casson_gordon as cg
from . import polytope as geo
from .fekete import audit_subadditive, fekete_n0, fekete_upper
from .knot_algebra import KnotError, KnotExpr, format_expr, torus
from .parser import ParseError, parse, parse_basis
from .polytope import frac_str
from .signatures import (
    PrecisionError,
    constant_intervals,
    evaluate,
    expr_step_table,
    max_half_abs,
)
from .stable_bounds import SCHEMA, ConsistencyError, g_st_interval, load_facts, unit_ball
from .svg import polygon_plot, step_plot

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _registry(args):
    return load_facts(args.facts) if args.facts else None


# -- sig -----------------------------------------------------------------------


def _sig_rows(expr: KnotExpr):
    return [(lo, hi, frac_str(v)) for lo, hi, v in expr_step_table(expr)]


def cmd_sig(args) -> int:
    expr = parse(args.expr)
    if args.format == "svg":
        _emit(step_plot(expr), args.out)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t_lo", "t_hi", "value"])
        w.writerows(_sig_rows(expr))
        _emit(buf.getvalue(), args.out)
    else:
        doc = {
            "schema": SCHEMA,
            "expr": format_expr(expr),
            "rows": [{"t_lo": lo, "t_hi": hi, "value": v} for lo, hi, v in _sig_rows(expr)],
            "sigma_half": frac_str(evaluate(expr, Fraction(1, 2))),
            "max_half_abs": frac_str(max_half_abs(expr)),
        }
        _emit(_dump(doc), args.out)
    return EXIT_OK


# -- bounds and ball -----------------------------------------------------------


def cmd_bounds(args) -> int:
    if args.format != "json":
        raise UsageError("bounds supports --format json only")
    rep = g_st_interval(parse(args.expr), args.category, _registry(args))
    _emit(_dump(rep.to_json()), args.out)
    return EXIT_OK


def _ball_svg(rep, title: str) -> str:
    if len(rep.basis) != 2:
        raise UsageError("svg output needs a 2-knot basis")
    layers = []
    if rep.outer_vertices is not None:
        layers.append(("outer", rep.outer_vertices.vertices, "#dddddd"))
    if rep.inner is not None:
        layers.append(("inner", rep.inner.vertices, "#888888"))
    names = tuple(k.name for k in rep.basis)
    return polygon_plot(layers, title, names)


def cmd_ball(args) -> int:
    basis = parse_basis(args.basis)
    rep = unit_ball(basis, args.category, _registry(args))
    if args.format == "svg":
        title = f"{args.category} unit ball on " + ", ".join(k.name for k in basis)
        _emit(_ball_svg(rep, title), args.out)
    elif args.format == "json":
        _emit(_dump(rep.to_json()), args.out)
    else:
        raise UsageError("ball supports --format json or svg")
    return EXIT_OK


# -- Casson-Gordon -------------------------------------------------------------


def cmd_cg_certify(args) -> int:
    try:
        eps = Fraction(args.eps)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"invalid --eps {args.eps!r}") from None
    if args.J:
        j = parse(args.J)
    else:
        j = cg.construct_J(eps, args.max_k, args.max_multiplicity)
    cert = cg.certify(eps, j)
    _emit(_dump(cert.to_json()), args.out)
    return EXIT_OK


def cmd_cg_verify(args) -> int:
    data = json.loads(Path(args.certificate).read_text())
    ok, problems = cg.verify_certificate(data)
    doc = {"schema": SCHEMA, "accepted": ok, "verdict": data.get("verdict"), "problems": problems}
    _emit(_dump(doc), args.out)
    return EXIT_OK if ok else EXIT_COMPUTE


# -- Fekete --------------------------------------------------------------------


def _read_table(path: str) -> dict[int, Fraction]:
    text = Path(path).read_text()
    if path.endswith(".json"):
        return {int(n): Fraction(v) for n, v in json.loads(text).items()}
    table = {}
    for row in csv.reader(io.StringIO(text)):
        if not row or row[0].strip() in ("n", ""):
            continue
        table[int(row[0])] = Fraction(row[1].strip())
    return table


def cmd_fekete(args) -> int:
    table = _read_table(args.table)
    if not table:
        raise UsageError("empty table")
    doc = {
        "schema": SCHEMA,
        "fekete_upper": frac_str(fekete_upper(table)),
        "violations": [str(v) for v in audit_subadditive(table)],
    }
    if args.N is not None:
        if args.B is None or args.eps is None:
            raise UsageError("--N needs --B and --eps")
        doc["n0"] = fekete_n0(args.N, Fraction(args.B), Fraction(args.eps))
    _emit(_dump(doc), args.out)
    return EXIT_OK


# -- reproduce -----------------------------------------------------------------

F = Fraction

# signature function of 3 T(2,7) - 2 T(2,11): union of jumps, and the maximum of 1/2|sigma|
FIGURE1 = {
    "expr": "3*T(2,7) - 2*T(2,11)",
    "jumps": ["1/22", "1/14", "3/22", "3/14", "5/22", "7/22", "5/14", "9/22"],
    "max_half_abs": "2",
    "argmax": ["3/14", "5/22"],
}

# unit ball on span{T(2,7), T(2,11)}: interval functionals and vertices
FIGURE3 = {
    "basis": "T(2,7),T(2,11)",
    "functionals": [(0, 1), (1, 1), (1, 2), (2, 2), (2, 3), (2, 4), (3, 4), (3, 5)],
    "vertices": [(F(3, 2), F(-1)), (F(1), F(-1, 2)), (F(1, 2), F(-1, 2)), (F(1, 3), F(0))],
    "boundary_non_vertex": (F(0), F(1, 5)),
}

# smooth versus topological balls on span{T(3,7), T(2,5)}
FIGURE4 = {
    "basis": "T(3,7),T(2,5)",
    "t37_jumps_up": ["1/21", "2/21", "4/21", "5/21", "8/21"],
    "t37_jumps_down": ["10/21"],
    "t37_max_half_abs": "5",
    "t37_half_sigma_half": "4",
    "tau": (6, 2),
    "topological_vertices": [(F(1, 2), F(-1)), (F(1, 2), F(-3, 2)), (F(0), F(1, 2)), (F(1, 3), F(-1, 3))],
    "smooth_vertices": [(F(1, 2), F(-1)), (F(1, 2), F(-3, 2)), (F(0), F(1, 2))],
    "separating_point": (F(1, 5), F(0)),
}

# 24 vertices (12 antipodal pairs) of the signature ball on span{3_1, 5_1, 5_2, 6_2}
TABLE4D = {
    "basis": "3_1,5_1,5_2,6_2",
    "pairs": [
        (2, -1, 0, 0), (0, 1, -2, 0), (0, 1, 0, -1), (2, -1, 0, -1), (0, 0, 1, 0), (2, 0, -1, 0),
        (0, 1, 0, -2),
        (2, 1, -2, -2), (2, 1, -2, -1), (0, 1, -2, 1), (0, 0, 1, -2), (2, 0, -1, -2),
    ],
}


def _symmetric(points) -> set:
    out = set()
    for p in points:
        p = tuple(F(x) for x in p)
        out.add(p)
        out.add(tuple(-x for x in p))
    return out


def _canon_dir(vec) -> tuple:
    first = next((x for x in vec if x), 0)
    return tuple(-x for x in vec) if first < 0 else tuple(vec)


def _check(name: str, ok: bool, problems: list[str]) -> None:
    if not ok:
        problems.append(name)


def _repro_figure1(outdir: Path, problems: list[str]) -> None:
    expr = parse(FIGURE1["expr"])
    ivs = constant_intervals(expr.basis)
    jumps = [str(iv.lo) for iv in ivs if iv.lo is not None]
    _check("figure1: jump set", jumps == FIGURE1["jumps"], problems)
    _check("figure1: max 1/2|sigma|", frac_str(max_half_abs(expr)) == FIGURE1["max_half_abs"], problems)
    lo, hi = (F(x) for x in FIGURE1["argmax"])
    _check("figure1: value on argmax interval",
           abs(evaluate(expr, (lo + hi) / 2)) / 2 == F(FIGURE1["max_half_abs"]), problems)
    (outdir / "figure1.svg").write_text(step_plot(expr, "Signature function of 3 T(2,7) - 2 T(2,11)"))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t_lo", "t_hi", "value"])
    w.writerows(_sig_rows(expr))
    (outdir / "figure1.csv").write_text(buf.getvalue())


def _repro_figure3(outdir: Path, problems: list[str]) -> None:
    rep = unit_ball(parse_basis(FIGURE3["basis"]), "topological")
    got = [_canon_dir(f.coefficients) for f in rep.functionals]
    want = [tuple(F(x) for x in v) for v in FIGURE3["functionals"]]
    _check("figure3: functionals", got == want, problems)
    _check("figure3: outer vertices",
           rep.outer_vertices is not None
           and set(rep.outer_vertices.vertices) == _symmetric(FIGURE3["vertices"]), problems)
    p = FIGURE3["boundary_non_vertex"]
    _check("figure3: (0,1/5) on boundary, not a vertex",
           geo.contains(rep.outer, p) == "boundary" and not geo.is_vertex(rep.outer, p), problems)
    _check("figure3: inner hull equals outer ball",
           rep.inner is not None and set(rep.inner.vertices) == _symmetric(FIGURE3["vertices"]), problems)
    (outdir / "figure3.svg").write_text(_ball_svg(rep, "Unit ball on span T(2,7), T(2,11)"))
    (outdir / "figure3.json").write_text(_dump(rep.to_json()))


def _repro_figure4(outdir: Path, problems: list[str]) -> None:
    basis = parse_basis(FIGURE4["basis"])
    t37 = KnotExpr.of(torus(3, 7))
    ivs = constant_intervals([torus(3, 7)])
    up = [str(iv.lo) for prev, iv in zip(ivs, ivs[1:]) if abs(iv.half_sigma[0]) > abs(prev.half_sigma[0])]
    down = [str(iv.lo) for prev, iv in zip(ivs, ivs[1:]) if abs(iv.half_sigma[0]) < abs(prev.half_sigma[0])]
    _check("figure4: T(3,7) jumps", up == FIGURE4["t37_jumps_up"] and down == FIGURE4["t37_jumps_down"], problems)
    _check("figure4: T(3,7) max", frac_str(max_half_abs(t37)) == FIGURE4["t37_max_half_abs"], problems)
    _check("figure4: T(3,7) at 1/2",
           frac_str(abs(evaluate(t37, F(1, 2))) / 2) == FIGURE4["t37_half_sigma_half"], problems)
    top = unit_ball(basis, "topological")
    smooth = unit_ball(basis, "smooth")
    tau = [f for f in smooth.functionals if f.kind == "tau"]
    _check("figure4: tau functional",
           len(tau) == 1 and tau[0].coefficients == tuple(F(x) for x in FIGURE4["tau"]), problems)
    _check("figure4: topological vertices",
           top.outer_vertices is not None
           and set(top.outer_vertices.vertices) == _symmetric(FIGURE4["topological_vertices"]), problems)
    _check("figure4: smooth vertices",
           smooth.outer_vertices is not None
           and set(smooth.outer_vertices.vertices) == _symmetric(FIGURE4["smooth_vertices"]), problems)
    p = FIGURE4["separating_point"]
    _check("figure4: (1/5,0) separates the categories",
           geo.contains(top.outer, p) != "outside" and geo.contains(smooth.outer, p) == "outside", problems)
    layers = []
    if top.outer_vertices is not None:
        layers.append(("topological", top.outer_vertices.vertices, "#dddddd"))
    if smooth.outer_vertices is not None:
        layers.append(("smooth", smooth.outer_vertices.vertices, "#aaaaaa"))
    if smooth.inner is not None:
        layers.append(("inner", smooth.inner.vertices, "#555555"))
    (outdir / "figure4.svg").write_text(
        polygon_plot(layers, "Smooth and topological balls on span T(3,7), T(2,5)",
                     ("T(3,7)", "T(2,5)"), marks=[p])
    )
    (outdir / "figure4.json").write_text(
        _dump({"schema": SCHEMA, "topological": top.to_json(), "smooth": smooth.to_json()})
    )


def _repro_table4d(outdir: Path, problems: list[str]) -> None:
    rep = unit_ball(parse_basis(TABLE4D["basis"]), "topological")
    verts = set() if rep.outer_vertices is None else set(rep.outer_vertices.vertices)
    _check("table-4d: 24 vertices", len(verts) == 24, problems)
    _check("table-4d: vertex set", verts == _symmetric(TABLE4D["pairs"]), problems)
    (outdir / "table-4d.json").write_text(_dump(rep.to_json()))


REPRO_TARGETS = {
    "figure1": _repro_figure1,
    "figure3": _repro_figure3,
    "figure4": _repro_figure4,
    "table-4d": _repro_table4d,
}


def cmd_reproduce(args) -> int:
    outdir = Path(args.out or "reproduce_out")
    outdir.mkdir(parents=True, exist_ok=True)
    targets = list(REPRO_TARGETS) if args.target == "all" else [args.target]
    problems: list[str] = []
    for t in targets:
        before = len(problems)
        REPRO_TARGETS[t](outdir, problems)
        status = "ok" if len(problems) == before else "MISMATCH"
        print(f"{t}: {status}")
    for p in problems:
        print(f"  mismatch: {p}", file=sys.stderr)
    return EXIT_MISMATCH if problems else EXIT_OK


# -- main ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="stablegenus", description="Bounds on the stable 4-genus of knots.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, formats=("json",), default="json"):
        p.add_argument("--category", choices=("smooth", "topological"), default="topological")
        p.add_argument("--facts", help="facts registry JSON file")
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("sig", help="signature step function of an expression")
    p.add_argument("expr")
    common(p, ("json", "csv", "svg"))
    p.set_defaults(func=cmd_sig)

    p = sub.add_parser("bounds", help="lower and upper bounds on g_st")
    p.add_argument("expr")
    common(p, ("json", "csv", "svg"))
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("ball", help="unit ball report for a comma-separated basis")
    p.add_argument("basis")
    common(p, ("json", "csv", "svg"))
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("cg-certify", help="Casson-Gordon certificate for K(J,-J)")
    p.add_argument("--eps", required=True)
    p.add_argument("--J", help="companion expression; searched for when omitted")
    p.add_argument("--max-k", type=int, default=15)
    p.add_argument("--max-multiplicity", type=int, default=5)
    p.add_argument("--out")
    p.set_defaults(func=cmd_cg_certify)

    p = sub.add_parser("cg-verify", help="re-check a serialized certificate")
    p.add_argument("certificate")
    p.add_argument("--out")
    p.set_defaults(func=cmd_cg_verify)

    p = sub.add_parser("fekete", help="subadditive table audit and limit bound")
    p.add_argument("table", help="JSON object n -> f(n), or CSV rows n,f(n)")
    p.add_argument("--N", type=int)
    p.add_argument("--B")
    p.add_argument("--eps")
    p.add_argument("--out")
    p.set_defaults(func=cmd_fekete)

    p = sub.add_parser("reproduce", help="regenerate reference artifacts and compare")
    p.add_argument("target", choices=list(REPRO_TARGETS) + ["all"])
    p.add_argument("--out", help="output directory (default reproduce_out)")
    p.set_defaults(func=cmd_reproduce)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, KnotError) as exc:
        print(f"stablegenus: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PrecisionError, geo.PolytopeError, ConsistencyError, cg.CGError, ValueError, OSError) as exc:
        print(f"stablegenus: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
