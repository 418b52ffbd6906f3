"""Command-line front end.

    chebpv integrate --expr "exp(x)/x" --singularity 0 [--oracle] [--format json]
    chebpv study --expr "exp(x)/x" --singularity 0 --degrees 4:256:x2 [--out FILE]
    chebpv basis --max-degree 10

Exit codes: 0 success, 2 bad input (usage, parse or validation error),
3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from chebpv.chebyshev import u_moment
from chebpv.errors import (
    ArgumentError,
    EndpointSingularity,
    HypersingularUnsupported,
    InvalidInterval,
    NumericalError,
    ValidationError,
)
from chebpv.expr import ParseError, parse, to_function
from chebpv.oracle import pv_excision
from chebpv.pv_core import Integrand, PVConfig, pv_integrate, validate

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERICAL = 3

STUDY_HEADER = "degree,nodes,value,tail_ratio,abs_err_vs_oracle"


class InputError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


def fmt(v: float) -> str:
    """17 significant digits, enough to round-trip any binary64."""
    if math.isnan(v):
        return "nan"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return "%.17g" % v


def _json_value(v) -> str:
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return fmt(v) if math.isfinite(v) else "null"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_json_value(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {_json_value(x)}" for k, x in v.items()) + "}"
    raise TypeError(f"cannot serialize {type(v).__name__}")


def dumps(obj) -> str:
    return _json_value(obj)


def _text_value(v) -> str:
    if isinstance(v, float):
        return fmt(v)
    if isinstance(v, (list, tuple)):
        return " ".join(_text_value(x) for x in v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def parse_nodes(text: str):
    if text == "auto":
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an even integer or 'auto', got {text!r}")


def parse_degrees(text: str) -> list[int]:
    """``start:stop:xK`` -> start, start*K, ... up to and including stop."""
    parts = text.split(":")
    if len(parts) != 3 or not parts[2].startswith("x"):
        raise InputError("--degrees", f"expected start:stop:xFACTOR, got {text!r}")
    try:
        start, stop, factor = int(parts[0]), int(parts[1]), int(parts[2][1:])
    except ValueError:
        raise InputError("--degrees", f"expected start:stop:xFACTOR, got {text!r}")
    if start < 1 or stop < start or factor < 2:
        raise InputError("--degrees", f"need 1 <= start <= stop and factor >= 2, got {text!r}")
    degrees = []
    d = start
    while d <= stop:
        degrees.append(d)
        d *= factor
    return degrees


def _integrand(args) -> tuple[Integrand, str]:
    try:
        tree = parse(args.expr)
    except ParseError as exc:
        raise InputError("--expr", f"ParseError at position {exc.position}: {exc.message}")
    a, b = args.interval
    g = Integrand(to_function(tree), a, b, args.singularity, args.order)
    try:
        validate(g)
    except ValidationError as exc:
        flag = {
            InvalidInterval: "--interval",
            EndpointSingularity: "--singularity",
            HypersingularUnsupported: "--order",
        }.get(type(exc), "--order")
        raise InputError(flag, f"{type(exc).__name__}: {exc}")
    return g, args.expr


def _config(degree: int, nodes) -> PVConfig:
    if degree < 0:
        raise InputError("--degree", f"must be non-negative, got {degree}")
    try:
        return PVConfig(degree=degree, node_count=nodes)
    except ArgumentError as exc:
        raise InputError("--nodes", str(exc))


def run_integrate(args, out) -> None:
    g, text = _integrand(args)
    cfg = _config(args.degree, args.nodes)
    result = pv_integrate(g, cfg)
    report = {
        "expr": text,
        "interval": [float(g.a), float(g.b)],
        "singularity": float(g.s),
        "order": float(g.p),
        "degree": cfg.degree,
        "nodes": cfg.nodes,
        "value": result.value,
        "converged": result.converged,
        "tail_ratio": result.tail_ratios,
    }
    if args.oracle:
        oracle_value, oracle_err = pv_excision(g)
        report["oracle_value"] = oracle_value
        report["oracle_error_estimate"] = oracle_err
        report["abs_err_vs_oracle"] = abs(result.value - oracle_value)
    if args.format == "json":
        print(dumps(report), file=out)
    else:
        for key, v in report.items():
            print(f"{key}: {_text_value(v)}", file=out)


def study_rows(g: Integrand, degrees: list[int]) -> list[tuple]:
    oracle_value, _ = pv_excision(g)
    rows = []
    for n in sorted(degrees):
        res = pv_integrate(g, PVConfig(degree=n))
        rows.append((n, res.pieces[0].series.node_count, res.value,
                     max(res.tail_ratios), abs(res.value - oracle_value)))
    return rows


def run_study(args, out) -> None:
    g, _ = _integrand(args)
    degrees = parse_degrees(args.degrees)
    rows = study_rows(g, degrees)
    lines = [STUDY_HEADER] + [
        f"{n},{m},{fmt(v)},{fmt(t)},{fmt(e)}" for n, m, v, t, e in rows
    ]
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        out.write(text)
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)


def run_basis(args, out) -> None:
    if args.max_degree < 0:
        raise InputError("--max-degree", f"must be non-negative, got {args.max_degree}")
    moments = [(i, u_moment(i)) for i in range(args.max_degree + 1)]
    if args.format == "json":
        print(dumps({"degree": [i for i, _ in moments], "moment": [m for _, m in moments]}), file=out)
    else:
        for i, m in moments:
            print(f"{i} {fmt(m)}", file=out)


def _add_integrand_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--expr", required=True, help="integrand in x, e.g. 'exp(x)/x'")
    p.add_argument("--interval", nargs=2, type=float, default=[-1.0, 1.0], metavar=("A", "B"))
    p.add_argument("--singularity", type=float, required=True, metavar="S")
    p.add_argument("--order", type=float, default=1.0, metavar="P",
                   help="singularity order; p <= 1 is supported")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chebpv", description="Cauchy principal values via U_j expansions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("integrate", help="integrate a single expression")
    _add_integrand_flags(p)
    p.add_argument("--degree", type=int, default=64)
    p.add_argument("--nodes", type=parse_nodes, default=None, metavar="M|auto")
    p.add_argument("--oracle", action="store_true", help="also run the excision oracle")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(run=run_integrate)

    p = sub.add_parser("study", help="convergence sweep over degrees, CSV output")
    _add_integrand_flags(p)
    p.add_argument("--degrees", default="4:256:x2", metavar="START:STOP:xK")
    p.add_argument("--out", default="-")
    p.set_defaults(run=run_study)

    p = sub.add_parser("basis", help="list the exact moments of U_0..U_n")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(run=run_basis)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.run(args, out)
    except InputError as exc:
        print(f"chebpv: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericalError as exc:
        print(f"chebpv: numerical failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"chebpv: error: --out: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
