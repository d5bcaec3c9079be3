"""``orbits`` command-line entry point.

Exit codes: 0 success, 1 bad input or domain error, 2 formula/oracle deviation.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import __version__
from .decomposition import Decomposition
from .errors import DomainError, InconsistencyError
from .formulas import decompose_formula
from .groups import GroupId, Point, orbit_points
from .io import decomposition_to_json, parse_point
from .limits import LimitSpec, continuity_check, orbit_limit, product_limit
from .oracle import decompose_oracle
from .scalar import ScalarParseError
from .svg import PALETTE, PlotSpec, emit_svg
from .verify import compare, parse_grid, sweep

EXIT_OK, EXIT_DOMAIN, EXIT_DEVIATION = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    # argparse would exit 2, which is reserved for deviations
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


class _Style:
    def __init__(self, stream) -> None:
        env = os.environ.get("ORBITS_COLOR")
        if env == "0":
            self.on = False
        elif env is not None:
            self.on = True
        else:
            self.on = hasattr(stream, "isatty") and stream.isatty()

    def _wrap(self, code: str, text: str) -> str:
        return f"\033[{code}m{text}\033[0m" if self.on else text

    def bold(self, t: str) -> str:
        return self._wrap("1", t)

    def good(self, t: str) -> str:
        return self._wrap("32", t)

    def bad(self, t: str) -> str:
        return self._wrap("31", t)


def _point(text: str) -> Point:
    try:
        return parse_point(text)
    except ScalarParseError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _grid(text: str):
    try:
        return parse_grid(text)
    except (ScalarParseError, DomainError) as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _common(p: argparse.ArgumentParser, mu: bool = True, group_required: bool = True) -> None:
    p.add_argument("--group", required=group_required, type=str.upper,
                   choices=[g.value for g in GroupId])
    p.add_argument("--lambda", dest="lam", type=_point, required=True, metavar="PT",
                   help='dominant point, e.g. "1,2" or "2-1t,0" (t is the golden ratio)')
    if mu:
        p.add_argument("--mu", type=_point, metavar="PT")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="orbits", description="Products of rank-two Coxeter group orbits.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("orbit", help="list the points of one orbit")
    _common(p, mu=False)

    p = sub.add_parser("decompose", help="decompose a product of two orbits")
    _common(p)
    p.add_argument("--engine", choices=("formula", "oracle", "both"), default="formula")

    p = sub.add_parser("oracle", help="decompose by brute-force point expansion")
    _common(p)

    p = sub.add_parser("verify", help="sweep a grid comparing formula and oracle")
    p.add_argument("--group", type=str.upper, choices=[g.value for g in GroupId],
                   help="default: all four groups")
    p.add_argument("--lambda", dest="lam", type=_point, metavar="PT",
                   help="check one pair against --mu instead of sweeping")
    p.add_argument("--mu", type=_point, metavar="PT")
    p.add_argument("--grid", type=_grid, default="0,1,2,3", metavar="CSV")
    p.add_argument("--jobs", type=int, default=1, metavar="N")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("limit", help="one-sided limits of orbits and products")
    _common(p)
    p.add_argument("--limit-lambda", choices=("x", "y", "both"),
                   help="coordinate(s) of --lambda that tend to the given values")
    p.add_argument("--limit-mu", choices=("x", "y", "both"))
    p.add_argument("--eps", type=_grid, metavar="CSV",
                   help="decreasing samples for a continuity check")

    p = sub.add_parser("plot", help="draw orbits as SVG")
    _common(p)
    p.add_argument("--no-mirrors", action="store_true")
    p.add_argument("--no-axes", action="store_true")
    return ap


def _require_mu(args) -> Point:
    if args.mu is None:
        raise DomainError("--mu is required for this command")
    return args.mu


def _decomp_text(d: Decomposition, style: _Style) -> list[str]:
    head = f"{d.lam.pretty()} ⊗ {d.mu.pretty()} in {d.group.value}"
    lines = [style.bold(head), f"  = {d.pretty()}"]
    for t in d.terms:
        lines.append(f"  {str(t.multiplicity):>6}  O{t.dominant.pretty()}")
    cons = "conserved" if d.is_conserved() else style.bad("NOT conserved")
    lines.append(f"  size {d.total_size()} = {d.expected_size()} ({cons})")
    cls = d.congruence_class()
    if cls is not None:
        lines.append(f"  congruence class {cls}")
    return lines


def _cmd_orbit(args, style):
    g = GroupId(args.group)
    pts = orbit_points(g, args.lam)
    if args.format == "json":
        return {"group": g.value, "dominant": args.lam.to_json(), "size": len(pts),
                "points": [p.to_json() for p in pts]}, EXIT_OK
    lines = [style.bold(f"O{args.lam.pretty()} in {g.value}: {len(pts)} points")]
    lines += [f"  {p.pretty()}" for p in pts]
    return lines, EXIT_OK


def _cmd_decompose(args, style, engine: str):
    g = GroupId(args.group)
    mu = _require_mu(args)
    if engine == "formula":
        d = decompose_formula(g, args.lam, mu)
    elif engine == "oracle":
        d = decompose_oracle(g, args.lam, mu)
    else:
        c = compare(g, args.lam, mu)
        code = EXIT_OK if c.agree else EXIT_DEVIATION
        if args.format == "json":
            return {"formula": c.formula and decomposition_to_json(c.formula),
                    "oracle": c.oracle and decomposition_to_json(c.oracle),
                    "agree": c.agree,
                    "deviation": c.deviation and c.deviation.to_json()}, code
        shown = c.formula or c.oracle
        lines = _decomp_text(shown, style) if shown is not None else []
        if c.agree:
            lines.append(style.good("  formula and oracle agree"))
        else:
            lines.append(style.bad(c.deviation.pretty()))
        return lines, code
    if args.format == "json":
        return decomposition_to_json(d), EXIT_OK
    return _decomp_text(d, style), EXIT_OK


def _cmd_verify(args, style):
    if args.lam is not None:
        if args.group is None:
            raise DomainError("--group is required when checking a single pair")
        pairs = [(args.lam, _require_mu(args))]
        reports = [sweep(args.group, [], jobs=1, pairs=pairs)]
    else:
        groups = [args.group] if args.group else [g.value for g in GroupId]
        reports = [sweep(g, args.grid, jobs=max(1, args.jobs)) for g in groups]
    ok = all(r.ok for r in reports)
    code = EXIT_OK if ok else EXIT_DEVIATION
    if args.format == "json":
        return {"ok": ok, "reports": [r.summary() for r in reports]}, code
    lines = []
    for r in reports:
        s = r.summary()
        status = style.good("ok") if r.ok else style.bad("FAIL")
        lines.append(f"{s['group']}: {s['pairs']} pairs, {s['deviations']} deviations, "
                     f"conservation {s['conservation_failures']}, "
                     f"congruence {s['congruence_failures']}, "
                     f"commutativity {s['commutativity_failures']} failures "
                     f"[{s['seconds']:.2f}s] {status}")
        lines += [style.bad(d.pretty()) for d in r.deviations]
    return lines, code


def _cmd_limit(args, style):
    g = GroupId(args.group)
    lam = LimitSpec(args.limit_lambda, args.lam) if args.limit_lambda else args.lam
    if args.mu is None:
        if not isinstance(lam, LimitSpec):
            raise DomainError("--limit-lambda is required for a single-orbit limit")
        t = orbit_limit(g, lam)
        if args.format == "json":
            return {"group": g.value, "dominant": t.dominant.to_json(),
                    "multiplicity": f"{t.multiplicity.numerator}/{t.multiplicity.denominator}"
                    }, EXIT_OK
        return [f"lim O = {t.pretty()}"], EXIT_OK
    mu = LimitSpec(args.limit_mu, args.mu) if args.limit_mu else args.mu
    d = product_limit(g, lam, mu)
    report = continuity_check(g, lam, mu, args.eps) if args.eps else None
    if args.format == "json":
        out = {"group": g.value, "limit": decomposition_to_json(d)}
        if report is not None:
            out["continuity"] = report.summary()
        return out, EXIT_OK
    lines = [style.bold(f"limit of {d.lam.pretty()} ⊗ {d.mu.pretty()} in {g.value}"),
             f"  = {d.pretty()}", f"  size {d.total_size()}"]
    if report is not None:
        s = report.summary()
        lines.append(f"  eps {', '.join(s['eps'])}: deviations {', '.join(s['deviations'])}")
        lines.append(f"  monotone {s['monotone']}, multiplicities stable {s['stable']}")
    return lines, EXIT_OK


def _cmd_plot(args, style):
    g = GroupId(args.group)
    items = [(args.lam, PALETTE[0])]
    if args.mu is not None:
        items.append((args.mu, PALETTE[1]))
    spec = PlotSpec(g, tuple(items), not args.no_mirrors, not args.no_axes)
    text = emit_svg(spec)
    return text, EXIT_OK


def _emit(result, args, stream) -> None:
    if isinstance(result, dict):
        text = json.dumps(result, indent=2, ensure_ascii=False) + "\n"
    elif isinstance(result, list):
        text = "\n".join(result) + "\n"
    else:
        text = result
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stream.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    style = _Style(sys.stdout if not args.out else None)
    try:
        if args.command == "orbit":
            result, code = _cmd_orbit(args, style)
        elif args.command in ("decompose", "oracle"):
            engine = "oracle" if args.command == "oracle" else args.engine
            result, code = _cmd_decompose(args, style, engine)
        elif args.command == "verify":
            result, code = _cmd_verify(args, style)
        elif args.command == "limit":
            result, code = _cmd_limit(args, style)
        else:
            result, code = _cmd_plot(args, style)
    except (DomainError, ScalarParseError) as e:
        print(f"orbits: error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except InconsistencyError as e:
        print(f"orbits: {e}", file=sys.stderr)
        return EXIT_DEVIATION
    _emit(result, args, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
