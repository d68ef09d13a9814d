"""Command-line front end.

Examples::

    koornwinder eval --family square --params 0,0,0,0 --n 0 --k 0 --x 0 --y 0
    koornwinder deriv --family laguerre-jacobi --params 1,0.5 --param alpha --n 3 --k 1
    koornwinder verify deriv --family square --random 3 --nmax 6 --format csv --out deriv.csv

Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from .derivatives import SUPPORTED_PARAMS, UnsupportedParameterError, derivative_expansion
from .families import Family, FamilySpec, MultiIndex, family_eval, family_norm, family_weight
from .verification import (
    ORTHO_PARAMS,
    sample_params,
    summarize,
    verify_derivatives,
    verify_norms,
    verify_orthogonality,
    verify_quadrature,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def format_number(v):
    """17 significant digits, so every float round-trips exactly."""
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)):
        return int(v)
    v = float(v)
    if not math.isfinite(v):
        return None
    return f"{v:.17g}"


def to_json_line(record: dict) -> str:
    parts = []
    for key, value in record.items():
        v = format_number(value)
        if isinstance(value, (float, np.floating)) and v is not None:
            token = v  # raw JSON number
        else:
            token = json.dumps(v)
        parts.append(f"{json.dumps(key)}: {token}")
    return "{" + ", ".join(parts) + "}"


def write_records(records: list[dict], fmt: str, out: str | None) -> None:
    if fmt == "json":
        text = "".join(to_json_line(r) + "\n" for r in records)
    else:
        buf = io.StringIO()
        if records:
            writer = csv.DictWriter(buf, fieldnames=list(records[0]), lineterminator="\n")
            writer.writeheader()
            for r in records:
                writer.writerow({k: ("" if format_number(v) is None else format_number(v)) for k, v in r.items()})
        text = buf.getvalue()
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def parse_family(args) -> FamilySpec:
    try:
        params = tuple(float(p) for p in args.params.split(","))
    except ValueError:
        raise UsageError(f"--params must be comma-separated numbers, got {args.params!r}") from None
    try:
        return FamilySpec(Family(args.family), params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_eval(args) -> int:
    f = parse_family(args)
    try:
        idx = MultiIndex(args.n, args.k)
        value = family_eval(f, idx, args.x, args.y)
        try:
            weight = family_weight(f, args.x, args.y)
        except ValueError:
            weight = math.nan  # boundary point: weight undefined
        norm = family_norm(f, idx)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    record = {"family": f.family.value, "n": idx.n, "k": idx.k, "x": args.x, "y": args.y, "value": value, "weight": weight, "norm": norm}
    write_records([record], args.format, args.out)
    return EXIT_OK


def cmd_deriv(args) -> int:
    f = parse_family(args)
    try:
        e = derivative_expansion(f, args.param, MultiIndex(args.n, args.k))
    except UnsupportedParameterError as exc:
        raise UsageError(f"{exc} (unsupported by the closed forms implemented here)") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    header = {"family": f.family.value, "params": ",".join(repr(p) for p in f.params), "n": e.base_index.n, "k": e.base_index.k, "parameter": e.parameter}
    records = [{**header, **r} for r in e.records()]
    if e.is_empty:
        print(f"zero derivative: d/d{args.param} P_{{{args.n},{args.k}}} vanishes identically", file=sys.stderr)
    write_records(records, args.format, args.out)
    return EXIT_OK


def _specs(args) -> list[FamilySpec]:
    if args.random is not None:
        if args.random < 1:
            raise UsageError("--random needs a positive count")
        rng = np.random.default_rng(args.seed)
        return [sample_params(args.family, rng) for _ in range(args.random)]
    if args.params is None:
        raise UsageError("give --params or --random N")
    return [parse_family(args)]


def cmd_verify(args) -> int:
    specs = _specs(args)
    family = Family(args.family)
    if args.param is not None:
        if args.param not in SUPPORTED_PARAMS[family]:
            raise UsageError(f"{args.param} is not a supported derivative parameter for {family.value}")
        params = [args.param]
    elif args.kind == "ortho":
        params = list(ORTHO_PARAMS[family])
    else:
        params = list(SUPPORTED_PARAMS[family])
    tol = {k: v for k, v in (("rtol", args.rtol), ("atol", args.atol)) if v is not None}

    cases = []
    for i, f in enumerate(specs):
        if args.kind == "deriv":
            for p in params:
                cases += verify_derivatives(f, p, args.nmax, points=args.points, seed=args.seed + i, **tol)
        elif args.kind == "ortho":
            for p in params:
                cases += verify_orthogonality(f, p, args.nmax, **tol)
        elif args.kind == "norms":
            cases += verify_norms(f, args.nmax, **tol)
        else:
            cases += verify_quadrature(f, args.nmax, **({"rtol": args.rtol} if args.rtol is not None else {}))
    cases.sort(key=lambda c: c.key)
    write_records([c.record() for c in cases], args.format, args.out)
    s = summarize(cases)
    print(f"{args.kind} {family.value}: {s['passed']}/{s['cases']} passed, {s['failed']} failed, max abs error {s['max_abs_error']:.3e}", file=sys.stderr)
    return EXIT_OK if s["failed"] == 0 else EXIT_FAIL


def _common(p: argparse.ArgumentParser, params_required=True) -> None:
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--params", required=params_required, help="comma-separated: alpha,beta[,gamma,delta]")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None, help="output path (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="koornwinder", description="Koornwinder polynomials, parameter derivatives and their verification")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="value, weight and norm of one basis element at a point")
    _common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("deriv", help="dump a parameter-derivative expansion")
    _common(p)
    p.add_argument("--param", required=True, choices=("alpha", "beta", "gamma", "delta"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_deriv)

    p = sub.add_parser("verify", help="run an oracle sweep")
    p.add_argument("kind", choices=("deriv", "ortho", "norms", "quadrature"))
    _common(p, params_required=False)
    p.add_argument("--param", choices=("alpha", "beta", "gamma", "delta"), default=None)
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--random", type=int, default=None, metavar="N", help="N seeded random parameter draws")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--points", type=int, default=10, help="sample points per case (deriv)")
    p.add_argument("--rtol", type=float, default=None)
    p.add_argument("--atol", type=float, default=None)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "nmax", 0) < 0:
        print("error: --nmax must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
