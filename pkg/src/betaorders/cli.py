"""Command-line front end: deciders, checkers, scans, and report tables.

Five verbs, one invocation each:

    decide    closed-form order verdict for a pair of Beta laws
    verify    numerical order check for the same pair
    scan      exceedance monotonicity sweep along one shape parameter
    identity  Beta tail vs binomial CDF cross-validation
    report    exceedance table over a parameter grid

All output is deterministic: sampled lines come from a fixed seed
(overridable with --seed), JSON renders floats with 17 significant
digits, and CSV uses '.' decimals with LF row endings regardless of
platform.  Exit codes: 0 success, 1 a check failed (witness or
violation found), 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from .consequences import (
    beta_binomial_identity_check,
    exceedance_row,
    scan_monotone,
)
from .distributions import BetaParams, beta_cdf, beta_pdf, beta_quantile
from .orders import (
    DEFAULT_SEED,
    OrderKind,
    decide_beta_order,
    sample_affine_maps,
    sample_slopes,
    verify_convex_numeric,
    verify_st_numeric,
    verify_star_numeric,
)
from .signpattern import DEFAULT_ZERO_TOL, GridPolicy

__all__ = ["main", "run"]

_ORDER_KINDS = {
    "st": OrderKind.STOCHASTIC_DOMINANCE,
    "star": OrderKind.STAR_SHAPED,
    "convex": OrderKind.CONVEX_TRANSFORM,
}


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse wants to print multi-line usage and die; surface a single
    # diagnostic line and a clean exit code instead
    def error(self, message):
        raise _CliError(message)


def _parse_pair(text: str) -> BetaParams:
    parts = text.split(",")
    if len(parts) != 2:
        raise _CliError(f"expected two comma-separated shapes, got {text!r}")
    try:
        return BetaParams(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise _CliError(str(exc)) from None


def _parse_values(text: str) -> list[float]:
    """Either an explicit comma list '1,2,4' or an arithmetic 'lo:hi:n'."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise _CliError(f"grid spec must be lo:hi:count, got {text!r}")
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
        if count < 1:
            raise _CliError("grid count must be at least 1")
        return [float(v) for v in np.linspace(lo, hi, count)]
    return [float(v) for v in text.split(",")]


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _to_json(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_to_json(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {_to_json(v)}" for k, v in value.items()) + "}"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _emit_json(payload: dict) -> None:
    sys.stdout.write(_to_json(payload) + "\n")


def _emit_csv(header, rows) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(cell) for cell in row])


def _cmd_decide(args) -> int:
    verdict = decide_beta_order(_ORDER_KINDS[args.order], args.p, args.q)
    if args.output == "csv":
        _emit_csv(["relation", "result"], [[verdict.relation.value, verdict.result.value]])
    else:
        _emit_json({"relation": verdict.relation.value, "result": verdict.result.value})
    return 0


def _closures(params: BetaParams):
    return (
        lambda x: beta_cdf(params, x),
        lambda u: beta_quantile(params, u),
        lambda x: beta_pdf(params, x),
    )


def _cmd_verify(args) -> int:
    P, Q = args.p, args.q
    grid = GridPolicy(n_points=args.grid_points)
    tol = args.tol if args.tol is not None else DEFAULT_ZERO_TOL
    F, fq, _ = _closures(P)
    G, gq, gpdf = _closures(Q)
    sampled = args.order != "st"
    if args.order == "st":
        report = verify_st_numeric(F, G, grid, tol=tol)
    elif args.order == "star":
        slopes = sample_slopes(args.lines, args.seed, fq, gq)
        report = verify_star_numeric(
            F, G, slopes, grid, tol=tol, g_quantile=gq, g_pdf=gpdf
        )
    else:
        lines = sample_affine_maps(args.lines, args.seed, fq, gq)
        report = verify_convex_numeric(
            F, G, lines, grid, tol=tol, g_quantile=gq, g_pdf=gpdf
        )
    witness = report.witness
    if args.output == "csv":
        header = [
            "relation", "consistent", "line_c", "line_d", "x", "observed",
            "pattern_bound", "grid_size", "seed", "lines",
        ]
        row = [
            _ORDER_KINDS[args.order].value,
            report.consistent,
            witness.line.c if witness else None,
            witness.line.d if witness else None,
            witness.x if witness else None,
            str(witness.observed) if witness else None,
            str(report.pattern_bound),
            report.grid_size,
            args.seed if sampled else None,
            args.lines if sampled else None,
        ]
        _emit_csv(header, [row])
    else:
        payload = {
            "relation": _ORDER_KINDS[args.order].value,
            "consistent": report.consistent,
            "witness": None
            if witness is None
            else {
                "line": {"c": witness.line.c, "d": witness.line.d},
                "x": witness.x,
                "observed": str(witness.observed),
            },
            "pattern_bound": str(report.pattern_bound),
            "grid_size": report.grid_size,
        }
        if sampled:
            payload["seed"] = args.seed
            payload["lines"] = args.lines
        _emit_json(payload)
    return 0 if report.consistent else 1


def _cmd_scan(args) -> int:
    values = _parse_values(args.values)
    tol = args.tol if args.tol is not None else 1e-10
    report = scan_monotone(args.axis, args.fixed, values, args.target, tol=tol)
    if args.output == "json":
        _emit_json(
            {
                "axis": report.axis,
                "direction": report.direction,
                "samples": [[v, p] for v, p in report.samples],
                "violations": list(report.violations),
            }
        )
    else:
        # a row is flagged when the step arriving at it breaks the trend
        flagged = {i + 1 for i in report.violations}
        rows = [
            [v, p, 1 if i in flagged else 0]
            for i, (v, p) in enumerate(report.samples)
        ]
        _emit_csv(["param", "probability", "violation_flag"], rows)
    return 0 if not report.violations else 1


def _cmd_identity(args) -> int:
    tol = args.tol if args.tol is not None else 1e-12
    grid = [float(p) for p in np.linspace(0.0, 1.0, args.grid_points)]
    ks = [args.k] if args.k is not None else list(range(args.n))
    worst = 0.0
    for k in ks:
        worst = max(worst, beta_binomial_identity_check(args.n, k, grid))
    if args.output == "csv":
        _emit_csv(
            ["n", "k", "grid_points", "max_error"],
            [[args.n, args.k, args.grid_points, worst]],
        )
    else:
        _emit_json(
            {"n": args.n, "k": args.k, "grid_points": args.grid_points, "max_error": worst}
        )
    return 0 if worst <= tol else 1


def _cmd_report(args) -> int:
    values = _parse_values(args.grid)
    rows = [exceedance_row(BetaParams(a, b)) for a in values for b in values]
    if args.output == "json":
        _emit_json(
            {
                "rows": [
                    {
                        "a": r.a,
                        "b": r.b,
                        "mean": r.mean,
                        "shape": {"kind": r.shape.kind, "location": r.shape.location},
                        "p_over_mean": r.p_over_mean,
                        "p_over_mode": r.p_over_mode,
                        "p_over_antimode": r.p_over_antimode,
                    }
                    for r in rows
                ]
            }
        )
    else:
        _emit_csv(
            [
                "a", "b", "mean", "shape", "location",
                "p_over_mean", "p_over_mode", "p_over_antimode",
            ],
            [
                [
                    r.a, r.b, r.mean, r.shape.kind, r.shape.location,
                    r.p_over_mean, r.p_over_mode, r.p_over_antimode,
                ]
                for r in rows
            ],
        )
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="betaorders", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sub, *, output_default, tol=False, grid_points=False, sampling=False):
        sub.add_argument("--output", choices=("json", "csv"), default=output_default)
        if tol:
            sub.add_argument("--tol", type=float, default=None)
        if grid_points:
            sub.add_argument("--grid-points", type=int, default=2049)
        if sampling:
            sub.add_argument("--lines", type=int, default=200)
            sub.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)

    decide = subs.add_parser("decide", help="closed-form order verdict")
    decide.add_argument("--order", choices=("st", "star", "convex"), required=True)
    decide.add_argument("--p", type=_parse_pair, required=True, metavar="A,B")
    decide.add_argument("--q", type=_parse_pair, required=True, metavar="A,B")
    common(decide, output_default="json")
    decide.set_defaults(handler=_cmd_decide)

    verify = subs.add_parser("verify", help="numerical order check")
    verify.add_argument("--order", choices=("st", "star", "convex"), required=True)
    verify.add_argument("--p", type=_parse_pair, required=True, metavar="A,B")
    verify.add_argument("--q", type=_parse_pair, required=True, metavar="A,B")
    common(verify, output_default="json", tol=True, grid_points=True, sampling=True)
    verify.set_defaults(handler=_cmd_verify)

    scan = subs.add_parser("scan", help="exceedance monotonicity sweep")
    scan.add_argument("--axis", choices=("a", "b"), required=True)
    scan.add_argument("--fixed", type=float, required=True)
    scan.add_argument("--values", required=True, metavar="LIST|LO:HI:N")
    scan.add_argument(
        "--target",
        choices=("mean-exceedance", "mode-exceedance", "antimode-exceedance"),
        required=True,
    )
    common(scan, output_default="csv", tol=True)
    scan.set_defaults(handler=_cmd_scan)

    identity = subs.add_parser("identity", help="Beta tail vs binomial CDF")
    identity.add_argument("--n", type=int, required=True)
    identity.add_argument("--k", type=int, default=None)
    common(identity, output_default="json", tol=True)
    identity.add_argument("--grid-points", type=int, default=101)
    identity.set_defaults(handler=_cmd_identity)

    report = subs.add_parser("report", help="exceedance table over a grid")
    report.add_argument("--grid", required=True, metavar="LIST|LO:HI:N")
    common(report, output_default="csv")
    report.set_defaults(handler=_cmd_report)

    return parser


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
        return args.handler(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))
