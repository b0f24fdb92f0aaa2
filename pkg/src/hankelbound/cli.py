"""Command-line front end.

Subcommands:
  verify        grid-search |H_{2,1}| for one family and check it against
                the closed-form sharp bound
  sweep         run verify over a list of parameter values
  ymax-certify  seeded random certification of the piecewise disk maximum
  extremal      extremal-function coefficients and equality residual
  gamma         logarithmic coefficients and H_{2,1} by both routes

Exit status: 0 pass, 1 verification failure, 2 usage or range error.
Machine output: complex numbers are serialized as [re, im]; JSON output is
byte-stable for identical configurations (seeds included in the report).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any

import numpy as np

from . import __version__
from .caratheodory import InvalidParameterError
from .families import (
    CoeffTriple,
    FamilySpec,
    Ozaki,
    ParameterRangeError,
    Robertson,
    Spirallike,
    extremal_coeffs,
    sharp_bound,
)
from .hankel import h21, h21_monomial, log_coeffs
from .search import SearchReport, bound_monotonicity, global_max, sweep
from .ymax import grid_allowance, y_closed_form, y_oracle

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

GAP_FLOOR = -1e-9  # search must never beat the proven bound


def _cx(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _family_from_args(args: argparse.Namespace) -> FamilySpec:
    if args.family == "spirallike":
        return Spirallike(alpha=args.alpha, beta=args.beta)
    if args.family == "ozaki":
        return Ozaki(nu=args.nu)
    if args.family == "robertson":
        return Robertson(lam=args.lam)
    raise ParameterRangeError(f"unknown family {args.family!r}")


def _family_dict(spec: FamilySpec) -> dict[str, Any]:
    if isinstance(spec, Spirallike):
        return {"family": "spirallike", "alpha": spec.alpha, "beta": spec.beta}
    if isinstance(spec, Ozaki):
        return {"family": "ozaki", "nu": spec.nu}
    return {"family": "robertson", "lambda": spec.lam}


def _report_row(rep: SearchReport) -> dict[str, Any]:
    row = _family_dict(rep.family)
    row.update(
        bound=rep.bound,
        max_abs_h21=rep.max_abs_h21,
        gap=rep.gap,
        argmax_p1=rep.argmax.p1,
        argmax_p2=_cx(rep.argmax.p2),
        argmax_p3=_cx(rep.argmax.p3),
        grid=rep.grid,
    )
    return row


def _flatten(row: dict[str, Any]) -> dict[str, Any]:
    flat: dict[str, Any] = {}
    for key, value in row.items():
        if isinstance(value, list) and len(value) == 2 and all(
            isinstance(v, float) for v in value
        ):
            flat[key + "_re"], flat[key + "_im"] = value
        else:
            flat[key] = value
    return flat


def _emit(payload: dict[str, Any], args: argparse.Namespace) -> None:
    if args.format == "json":
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        rows = [_flatten(r) for r in payload["results"]]
        fields: list[str] = []
        for row in rows:
            fields.extend(k for k in row if k not in fields)
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields)
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    else:
        lines = [f"command: {payload['command']}"]
        for row in payload["results"]:
            lines.append("-" * 40)
            lines.extend(f"{k}: {v}" for k, v in row.items())
        lines.append("-" * 40)
        lines.extend(f"{k}: {v}" for k, v in payload["summary"].items())
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _payload(command: str, config: dict[str, Any], results: list[dict[str, Any]],
             ok: bool, worst: float) -> dict[str, Any]:
    return {
        "command": command,
        "config": config,
        "results": results,
        "summary": {"pass": bool(ok), "worst_residual": float(worst)},
    }


def cmd_verify(args: argparse.Namespace) -> int:
    spec = _family_from_args(args)
    rep = global_max(spec, coarse=args.coarse, refine_rounds=args.refine_rounds)
    ok = GAP_FLOOR <= rep.gap <= args.tol
    config = _family_dict(spec)
    config.update(coarse=args.coarse, refine_rounds=args.refine_rounds, tol=args.tol)
    _emit(_payload("verify", config, [_report_row(rep)], ok, rep.gap), args)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_sweep(args: argparse.Namespace) -> int:
    values = [float(v) for v in args.values.split(",") if v.strip()]
    reports = sweep(args.family, values, coarse=args.coarse,
                    refine_rounds=args.refine_rounds, beta=args.beta)
    ok = all(GAP_FLOOR <= rep.gap <= args.tol for rep in reports)
    worst = max(rep.gap for rep in reports)
    config = {
        "family": args.family,
        "values": values,
        "beta": args.beta,
        "coarse": args.coarse,
        "refine_rounds": args.refine_rounds,
        "tol": args.tol,
    }
    payload = _payload("sweep", config, [_report_row(r) for r in reports], ok, worst)
    payload["summary"]["bound_monotonicity"] = bound_monotonicity(reports)
    _emit(payload, args)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_ymax_certify(args: argparse.Namespace) -> int:
    rng = np.random.default_rng(args.seed)
    triples = rng.uniform(-5.0, 5.0, size=(args.n, 3))
    worst = 0.0
    worst_triple = [0.0, 0.0, 0.0]
    passed = 0
    for A, B, C in triples:
        closed = y_closed_form(A, B, C).value
        grid = y_oracle(A, B, C, radial=args.radial, angular=args.angular)
        disc = abs(closed - grid)
        if disc <= args.tol + grid_allowance(B, C, args.radial, args.angular):
            passed += 1
        if disc > worst:
            worst = disc
            worst_triple = [float(A), float(B), float(C)]
    ok = passed == args.n
    config = {
        "n": args.n,
        "seed": args.seed,
        "tol": args.tol,
        "radial": args.radial,
        "angular": args.angular,
    }
    results = [{
        "n": args.n,
        "passed": passed,
        "worst_discrepancy": worst,
        "worst_triple": worst_triple,
    }]
    _emit(_payload("ymax-certify", config, results, ok, worst), args)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_extremal(args: argparse.Namespace) -> int:
    spec = _family_from_args(args)
    a = extremal_coeffs(spec)
    bound = sharp_bound(spec)
    value = abs(h21(a))
    residual = abs(value - bound)
    ok = residual <= args.tol
    config = _family_dict(spec)
    config["tol"] = args.tol
    row = _family_dict(spec)
    row.update(
        a2=_cx(a.a2), a3=_cx(a.a3), a4=_cx(a.a4),
        abs_h21=value, bound=bound, residual=residual,
    )
    _emit(_payload("extremal", config, [row], ok, residual), args)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_gamma(args: argparse.Namespace) -> int:
    if args.koebe:
        a = CoeffTriple(2.0, 3.0, 4.0)
        source = "koebe"
    elif args.family:
        spec = _family_from_args(args)
        a = extremal_coeffs(spec)
        source = f"extremal-{args.family}"
    else:
        try:
            a = CoeffTriple(complex(args.a2), complex(args.a3), complex(args.a4))
        except ValueError as exc:
            raise ParameterRangeError(f"malformed complex literal: {exc}") from exc
        source = "literal"
    g = log_coeffs(a)
    via_gamma = h21(a, check=False)
    via_monomial = h21_monomial(a)
    residual = abs(via_gamma - via_monomial)
    row = {
        "source": source,
        "a2": _cx(a.a2), "a3": _cx(a.a3), "a4": _cx(a.a4),
        "gamma1": _cx(g.g1), "gamma2": _cx(g.g2), "gamma3": _cx(g.g3),
        "h21_gamma_path": _cx(via_gamma),
        "h21_monomial_path": _cx(via_monomial),
        "path_residual": residual,
    }
    config = {"source": source}
    _emit(_payload("gamma", config, [row], True, residual), args)
    return EXIT_PASS


def _add_family_flags(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--family", choices=["spirallike", "ozaki", "robertson"],
                        required=required)
    parser.add_argument("--alpha", type=float, default=0.0)
    parser.add_argument("--beta", type=float, default=0.0)
    parser.add_argument("--nu", type=float, default=1.0)
    parser.add_argument("--lambda", dest="lam", type=float, default=0.5)


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["json", "csv", "table"], default="json")
    parser.add_argument("--out", default=None, help="output path (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hankelbound",
        description="Certify sharp bounds on the second Hankel determinant "
                    "of logarithmic coefficients.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="search the parameter domain and compare "
                                      "against the proven bound")
    _add_family_flags(p)
    p.add_argument("--coarse", type=int, default=128)
    p.add_argument("--refine-rounds", type=int, default=3)
    p.add_argument("--tol", type=float, default=5e-4)
    _add_output_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="verify over a list of parameter values")
    p.add_argument("--family", choices=["spirallike", "ozaki", "robertson"],
                   required=True)
    p.add_argument("--values", required=True,
                   help="comma-separated parameter values (alpha, nu, or lambda)")
    p.add_argument("--beta", type=float, default=0.0,
                   help="fixed beta for spirallike sweeps")
    p.add_argument("--coarse", type=int, default=128)
    p.add_argument("--refine-rounds", type=int, default=3)
    p.add_argument("--tol", type=float, default=5e-4)
    _add_output_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("ymax-certify", help="random certification of the "
                                            "piecewise disk maximum")
    p.add_argument("--n", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--radial", type=int, default=512)
    p.add_argument("--angular", type=int, default=2048)
    _add_output_flags(p)
    p.set_defaults(func=cmd_ymax_certify)

    p = sub.add_parser("extremal", help="extremal coefficients and equality "
                                        "residual")
    _add_family_flags(p)
    p.add_argument("--tol", type=float, default=1e-10)
    _add_output_flags(p)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("gamma", help="logarithmic coefficients and H_{2,1}")
    p.add_argument("--koebe", action="store_true", help="use the Koebe coefficients")
    _add_family_flags(p, required=False)
    p.add_argument("--a2", default="0")
    p.add_argument("--a3", default="0")
    p.add_argument("--a4", default="0")
    _add_output_flags(p)
    p.set_defaults(func=cmd_gamma)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParameterRangeError, InvalidParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
