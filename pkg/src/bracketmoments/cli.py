"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from .errors import BracketMomentsError, InvalidParam, OutOfRange
from .exactnum import format_rational, parse_rational
from .hydrogen import METHODS, Method, MomentQuery, MomentResult, g_integral_form_a, g_integral_form_b
from .oracle import oracle_g
from .verify import run_all

FIELDS = ["n", "l", "k", "mu", "method", "value_exact", "value_float", "degenerate_regularized"]

METHOD_FLAGS = {
    "direct": Method.DIRECT_SUM,
    "f3": Method.THEOREM_F3,
    "hahn": Method.HAHN_ROUTE,
    "bracket": Method.BRACKET_ENGINE,
    "oracle": Method.ORACLE,
}


class UsageError(Exception):
    pass


def _num(text: str, allow_float: bool):
    if allow_float:
        try:
            return parse_rational(text)
        except ValueError:
            try:
                return float(text)
            except ValueError:
                raise UsageError(f"not a number: {text!r}") from None
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise UsageError(f"{exc} (use p/q, or --float for decimals)") from None


def _str(x) -> str:
    return repr(x) if isinstance(x, float) else format_rational(x)


def record(q: MomentQuery, r: MomentResult) -> dict:
    exact = isinstance(r.value, Fraction)
    return {
        "n": str(q.n),
        "l": str(q.l),
        "k": _str(q.k),
        "mu": _str(q.mu),
        "method": r.method.value,
        "value_exact": format_rational(r.value) if exact else "",
        "value_float": f"{float(r.value):.15g}",
        "degenerate_regularized": r.degenerate_regularized,
    }


def emit(records: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec) + "\n")
        return
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    w.writeheader()
    for rec in records:
        w.writerow({**rec, "degenerate_regularized": str(rec["degenerate_regularized"]).lower()})
    out.write(buf.getvalue())


def cmd_moment(args, out, err) -> int:
    q = MomentQuery(int(args.n), int(args.l), _num(args.k, args.float), _num(args.mu, args.float))
    methods = list(Method) if args.method == "all" else [METHOD_FLAGS[args.method]]
    records, values = [], {}
    for m in methods:
        try:
            r = METHODS[m](q)
        except (OutOfRange, InvalidParam) as exc:
            if args.method != "all":
                raise
            err.write(f"skipped {m.value}: {exc}\n")
            continue
        records.append(record(q, r))
        values[m.value] = r.value
    emit(records, args.format, out)
    if args.method == "all":
        exact = [v for v in values.values() if isinstance(v, Fraction)]
        floats = [float(v) for v in values.values()]
        ok = len(set(exact)) <= 1 and all(abs(a - floats[0]) <= 1e-10 * abs(floats[0]) for a in floats)
        out.flush()
        err.write(f"agreement: {'OK' if ok else 'MISMATCH'} ({len(values)} methods)\n")
        return 0 if ok else 1
    return 0


def cmd_table(args, out, err) -> int:
    if args.n_max < 1 or args.k_min > args.k_max:
        raise UsageError("need n-max >= 1 and k-min <= k-max")
    mu = _num(args.mu, False)
    method = METHODS[METHOD_FLAGS[args.method]]
    records = []
    for n in range(1, args.n_max + 1):
        for l in range(n):
            for k in range(args.k_min, args.k_max + 1):
                if 2 * l + k + 3 <= 0:
                    continue
                q = MomentQuery(n, l, k, mu)
                try:
                    records.append(record(q, method(q)))
                except OutOfRange:
                    continue
    emit(records, args.format, out)
    return 0


def cmd_verify(args, out, err) -> int:
    if args.n_max < 1:
        raise UsageError("need n-max >= 1")
    reports = run_all(args.n_max, args.seed, args.strict_paper)
    for r in reports:
        out.write(r.line() + "\n")
    failed = [r for r in reports if not r.passed]
    out.write(f"{'FAILED' if failed else 'OK'}: {len(reports) - len(failed)}/{len(reports)} checks passed\n")
    return 1 if failed else 0


def cmd_gks(args, out, err) -> int:
    l, s = int(args.l), int(args.s)
    k = parse_rational(args.k)
    mu = _num(args.mu, False)
    if k.denominator != 1:
        raise UsageError("k must be an integer")
    k = int(k)
    if l < 0 or s < 0:
        raise UsageError("l and s must be nonnegative")
    if 2 * l + k + 3 <= 0:
        raise UsageError("2l+k+3 > 0 violated")
    vals = {"form_a": g_integral_form_a(l, k, s, mu), "form_b": g_integral_form_b(l, k, s, mu),
            "oracle": oracle_g(l, k, s, mu)}
    for name, v in vals.items():
        out.write(f"{name} {format_rational(v)}\n")
    ok = len(set(vals.values())) == 1
    out.write(f"verdict {'OK' if ok else 'MISMATCH'}\n")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bracketmoments", description="Exact radial moments of hydrogen.")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("moment", help="one moment <r^k>")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--l", type=int, required=True)
    m.add_argument("--k", required=True)
    m.add_argument("--mu", default="1")
    m.add_argument("--method", choices=[*METHOD_FLAGS, "all"], default="direct")
    m.add_argument("--format", choices=["json", "csv"], default="json")
    m.add_argument("--float", action="store_true", help="accept decimal k and mu")
    m.set_defaults(func=cmd_moment)

    t = sub.add_parser("table", help="grid of moments")
    t.add_argument("--n-max", type=int, required=True)
    t.add_argument("--k-min", type=int, required=True)
    t.add_argument("--k-max", type=int, required=True)
    t.add_argument("--mu", default="1")
    t.add_argument("--method", choices=list(METHOD_FLAGS), default="direct")
    t.add_argument("--format", choices=["json", "csv"], default="csv")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run the self-check suite")
    v.add_argument("--n-max", type=int, default=5)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--strict-paper", action="store_true", help="treat the known erratum as a failure")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gks", help="the G integral in both closed forms and by the oracle")
    g.add_argument("--l", type=int, required=True)
    g.add_argument("--k", required=True)
    g.add_argument("--s", type=int, required=True)
    g.add_argument("--mu", default="1")
    g.set_defaults(func=cmd_gks)
    return p


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, err)
    except (UsageError, InvalidParam, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except BracketMomentsError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
