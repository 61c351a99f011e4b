"""Command-line interface.

Subcommands: diagram, gradient, pair, relative, oracle, check.
Exit codes: 0 success, 2 parse error, 3 exactness not certified under
--require-exact, 4 oracle failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .exponents import (
    ExponentResult,
    loj_gradient,
    loj_pair,
    reduction_identities,
    relative_bound,
)
from .geometry import (
    declivity,
    is_exceptional,
    label_edges,
    newton_diagram,
    segment_label,
    side_polygon,
)
from .initial_forms import classify_derivative_polygon, poly_nondegenerate_at_infinity
from .oracle import OracleConfig, OracleError, estimate_loj, estimate_relative
from .poly import PolyParseError, SparsePoly, parse_polynomial
from .svg import render_diagram_svg

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_EXACT = 3
EXIT_ORACLE = 4


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="newtonloj",
        description="Lojasiewicz exponents at infinity from Newton polygons",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def oracle_flags(p):
        p.add_argument("--radii", help="comma-separated sampling radii", default=None)
        p.add_argument("--angles", type=int, default=None, help="angular samples per radius")
        p.add_argument("--tolerance", type=float, default=None, help="slope fit tolerance")

    p = sub.add_parser("diagram", help="Newton diagram and side polygons")
    p.add_argument("poly")
    p.add_argument("--json", action="store_true")
    p.add_argument("--svg", metavar="PATH", help="write an SVG rendering")

    p = sub.add_parser("gradient", help="exponent of the gradient of one polynomial")
    p.add_argument("poly")
    p.add_argument("--json", action="store_true")
    p.add_argument("--oracle", action="store_true", help="corroborate numerically")
    p.add_argument("--require-exact", action="store_true")
    p.add_argument("--batch", metavar="FILE")
    oracle_flags(p)

    p = sub.add_parser("pair", help="exponent of a pair of polynomials")
    p.add_argument("poly_f")
    p.add_argument("poly_g")
    p.add_argument("--json", action="store_true")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--require-exact", action="store_true")
    p.add_argument("--batch", metavar="FILE")
    oracle_flags(p)

    p = sub.add_parser("relative", help="exponent of a pair relative to one variable")
    p.add_argument("poly_f")
    p.add_argument("poly_g")
    p.add_argument("--var", choices=["X", "Y"], required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--require-exact", action="store_true")
    oracle_flags(p)

    p = sub.add_parser("oracle", help="numeric estimates only")
    p.add_argument("poly_f")
    p.add_argument("poly_g")
    p.add_argument("--json", action="store_true")
    oracle_flags(p)

    p = sub.add_parser("check", help="reduction identities and derivative structure")
    p.add_argument("poly")
    p.add_argument("--json", action="store_true")
    return top


def _oracle_config(args) -> OracleConfig:
    kwargs = {}
    if getattr(args, "radii", None):
        kwargs["radii"] = tuple(float(r) for r in args.radii.split(","))
    if getattr(args, "angles", None):
        kwargs["angles"] = args.angles
    if getattr(args, "tolerance", None):
        kwargs["tolerance"] = args.tolerance
    return OracleConfig(**kwargs)


def _parse(text: str) -> SparsePoly:
    try:
        return parse_polynomial(text)
    except (PolyParseError, ValueError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _emit(obj: dict, as_json: bool, lines: List[str]):
    if as_json:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _result_lines(r: ExponentResult, title: str) -> List[str]:
    lines = [f"{title} = {r.value} ({r.status})"]
    if r.nondegenerate is not None:
        lines.append(f"nondegenerate: {'yes' if r.nondegenerate else 'no'}")
    if r.six is not None:
        lines.append(
            "six quantities: " + ", ".join(str(q) for q in r.six.as_tuple())
        )
    for w in r.witnesses:
        mark = "  <- minimum" if w.get("attains_minimum") else ""
        if "segment" in w:
            side = w.get("side", "")
            val = w["intercept"]
            val = f"{val['num']}/{val['den']}" if isinstance(val, dict) else val
            lines.append(f"  {side} segment {w['segment']}: intercept {val}{mark}")
        else:
            val = w["value"]
            val = f"{val['num']}/{val['den']}" if isinstance(val, dict) else val
            lines.append(f"  {w['quantity']} = {val}{mark}")
    for n in r.notes:
        lines.append(f"note: {n}")
    return lines


def _cmd_diagram(args) -> int:
    h = _parse(args.poly)
    d = newton_diagram(h)
    labels = label_edges(d)
    report = {
        "vertices": [list(v) for v in d.vertices],
        "support_size": d.support_size,
        "edges": [{"label": name, "segment": str(s)} for name, s in labels],
        "right": [],
        "top": [],
    }
    lines = ["vertices: " + ", ".join(f"({a},{b})" for a, b in d.vertices)]
    for side in ("right", "top"):
        poly = side_polygon(d, side)
        names = []
        for s in poly.segments:
            name = segment_label(d, s) or str(s)
            exc = is_exceptional(s, side)
            report[side].append(
                {
                    "label": name,
                    "segment": str(s),
                    "declivity": str(declivity(s, side)),
                    "exceptional": exc,
                }
            )
            names.append(name + (" (exceptional)" if exc else ""))
        lines.append(f"{side} polygon: " + (", ".join(names) if names else "(empty)"))
        for entry in report[side]:
            lines.append(
                f"  {entry['label']}: {entry['segment']}, declivity {entry['declivity']}"
                + (", exceptional" if entry["exceptional"] else "")
            )
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(render_diagram_svg(h))
        lines.append(f"svg written to {args.svg}")
        report["svg"] = args.svg
    _emit(report, args.json, lines)
    return EXIT_OK


def _attach_oracle(report: dict, lines: List[str], estimate: float, breakdown: dict):
    report["oracle"] = {"estimate": estimate, "breakdown": breakdown}
    lines.append(f"oracle estimate: {estimate:.4f}")


def _finish_exponent(args, result: ExponentResult, report: dict, lines: List[str]) -> int:
    _emit(report, args.json, lines)
    if getattr(args, "require_exact", False) and result.status != "exact":
        return EXIT_NOT_EXACT
    return EXIT_OK


def _cmd_gradient(args) -> int:
    if args.batch:
        return _run_batch(args, ("poly",))
    h = _parse(args.poly)
    try:
        result = loj_gradient(h)
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    report = result.to_json()
    lines = _result_lines(result, "l_inf(grad h)")
    if args.oracle:
        hx, hy = h.strip_constant().diff("X"), h.strip_constant().diff("Y")
        try:
            est, breakdown = estimate_loj(hx, hy, _oracle_config(args))
        except (OracleError, ValueError) as exc:
            print(f"oracle failure: {exc}", file=sys.stderr)
            return EXIT_ORACLE
        _attach_oracle(report, lines, est, breakdown)
    return _finish_exponent(args, result, report, lines)


def _cmd_pair(args) -> int:
    if args.batch:
        return _run_batch(args, ("poly_f", "poly_g"))
    f, g = _parse(args.poly_f), _parse(args.poly_g)
    try:
        result = loj_pair(f, g)
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    report = result.to_json()
    lines = _result_lines(result, "l_inf(f, g)")
    if args.oracle:
        try:
            est, breakdown = estimate_loj(f, g, _oracle_config(args))
        except (OracleError, ValueError) as exc:
            print(f"oracle failure: {exc}", file=sys.stderr)
            return EXIT_ORACLE
        _attach_oracle(report, lines, est, breakdown)
    return _finish_exponent(args, result, report, lines)


def _cmd_relative(args) -> int:
    f, g = _parse(args.poly_f), _parse(args.poly_g)
    try:
        result = relative_bound(f, g, args.var)
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    report = result.to_json()
    lines = _result_lines(result, f"l_inf(f, g; {args.var})")
    if args.oracle:
        try:
            est, breakdown = estimate_relative(f, g, args.var, _oracle_config(args))
        except (OracleError, ValueError) as exc:
            print(f"oracle failure: {exc}", file=sys.stderr)
            return EXIT_ORACLE
        _attach_oracle(report, lines, est, breakdown)
    return _finish_exponent(args, result, report, lines)


def _cmd_oracle(args) -> int:
    f, g = _parse(args.poly_f), _parse(args.poly_g)
    cfg = _oracle_config(args)
    try:
        est, breakdown = estimate_loj(f, g, cfg)
        est_x, _ = estimate_relative(f, g, "X", cfg)
        est_y, _ = estimate_relative(f, g, "Y", cfg)
    except (OracleError, ValueError) as exc:
        print(f"oracle failure: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    report = {
        "estimate": est,
        "relative_X": est_x,
        "relative_Y": est_y,
        "breakdown": breakdown,
    }
    lines = [
        f"oracle l_inf estimate: {est:.4f}",
        f"oracle relative X: {est_x:.4f}",
        f"oracle relative Y: {est_y:.4f}",
    ]
    _emit(report, args.json, lines)
    return EXIT_OK


def _cmd_check(args) -> int:
    h = _parse(args.poly)
    report = {"reduction_identities": reduction_identities(h)}
    nondeg, verdicts = poly_nondegenerate_at_infinity(h.strip_constant())
    report["nondegenerate_at_infinity"] = nondeg
    report["segment_verdicts"] = [v.to_json() for v in verdicts]
    classes = {}
    hs = h.strip_constant()
    for var in ("X", "Y"):
        if hs.diff(var).is_zero:
            continue
        for side in ("right", "top"):
            key = f"d{var}_{side}"
            classes[key] = [
                c.to_json() for c in classify_derivative_polygon(hs, var, side)
            ]
    report["derivative_polygons"] = classes
    lines = []
    ri = report["reduction_identities"]
    lines.append(f"route: {ri['route']}")
    for c in ri.get("clauses", []):
        lines.append(f"  [{'pass' if c['pass'] else 'FAIL'}] {c['name']}: {c['detail']}")
    lines.append(f"nondegenerate at infinity: {'yes' if nondeg else 'no'}")
    for key, entries in classes.items():
        lines.append(f"{key}:")
        for e in entries:
            parent = f" parent {e['parent']}" if "parent" in e else ""
            lines.append(f"  {e['segment']}: {e['class']}{parent}")
    _emit(report, args.json, lines)
    return EXIT_OK


def _run_batch(args, fields) -> int:
    """Process a batch file, one input per line; polynomials separated by ';'."""
    worst = EXIT_OK
    with open(args.batch) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = [p.strip() for p in line.split(";")]
            if len(parts) != len(fields):
                print(f"line {lineno}: expected {len(fields)} polynomial(s)", file=sys.stderr)
                worst = max(worst, EXIT_PARSE)
                continue
            sub_args = argparse.Namespace(**vars(args))
            sub_args.batch = None
            for name, value in zip(fields, parts):
                setattr(sub_args, name, value)
            print(f"# line {lineno}: {line}")
            try:
                code = _cmd_gradient(sub_args) if len(fields) == 1 else _cmd_pair(sub_args)
            except SystemExit as exc:
                code = int(exc.code or 0)
            worst = max(worst, code)
    return worst


def main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "diagram": _cmd_diagram,
        "gradient": _cmd_gradient,
        "pair": _cmd_pair,
        "relative": _cmd_relative,
        "oracle": _cmd_oracle,
        "check": _cmd_check,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
