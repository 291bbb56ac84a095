"""Command-line front end: ``stringy-calc {hilb,obstruction,stringy}``.

Every number is printed exactly.  Exit codes: 0 success, 2 usage error,
3 not log-terminal, 4 unreadable or malformed input, 5 symbolic path failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from typing import Any, Sequence

from .errors import (
    BadSubsetKey,
    InconsistentEpoly,
    MissingEpoly,
    NotLogTerminal,
    OutOfRange,
    PoleAtOne,
    SchemaError,
    SymbolicPathUnavailable,
)
from .ogrady import obstruction_test, stratum_euler_table, to_stratification
from .series import hilbert_euler_table
from .stringy import (
    format_rational,
    limit_at_one,
    stratification_from_json,
    stratification_to_json,
    stringy_E_diagonal,
    stringy_euler,
)

log = logging.getLogger("stringy_calc")

MAX_ORDER_ENV = "STRINGY_CALC_MAX_ORDER"
DEFAULT_MAX_ORDER = 512


class UsageError(Exception):
    pass


def max_order() -> int:
    raw = os.environ.get(MAX_ORDER_ENV)
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{MAX_ORDER_ENV} must be an integer, got {raw!r}")


def a_table(order: int) -> list[int]:
    cap = max_order()
    if order > cap:
        raise UsageError(
            f"series order {order} exceeds {MAX_ORDER_ENV}={cap}; raise the cap to proceed"
        )
    return hilbert_euler_table(order)


def _bool(b: bool) -> str:
    return "true" if b else "false"


# -- rendering ---------------------------------------------------------------


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return _bool(v)
    if isinstance(v, list):
        return " ".join(str(x) for x in v)
    return str(v)


def render_table(rows: list[dict[str, Any]], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"rows": rows}, indent=2) + "\n"
    cols = list(rows[0]) if rows else []
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_cell(r[c]) for c in cols])
        return buf.getvalue()
    cells = [[_cell(r[c]) for c in cols] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(cols)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    lines += ["  ".join(x.rjust(w) for x, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def render_report(report: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    flat = {k: v for k, v in report.items() if k != "stratification"}
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["field", "value"])
        for k, v in flat.items():
            w.writerow([k, _cell(v)])
        return buf.getvalue()
    width = max(len(k) for k in flat)
    return "".join(f"{k.ljust(width)}  {_cell(v)}\n" for k, v in flat.items())


# -- commands ----------------------------------------------------------------


def cmd_hilb(args) -> str:
    table = a_table(args.max)
    rows = [{"n": n, "a_n": str(a)} for n, a in enumerate(table)]
    return render_table(rows, args.format)


def cmd_obstruction(args) -> str:
    order = 4 * args.max - 3 if args.vw else args.max
    table = a_table(order)
    rows = []
    for n in range(2, args.max + 1):
        r = obstruction_test(n, table, vw=args.vw)
        row: dict[str, Any] = {
            "n": n,
            "a_n": str(r.a_n),
            "n*a_n/(2n-3)": format_rational(r.value),
            "fractional_part": format_rational(r.fractional_part),
            "obstructed": r.obstructed,
        }
        if args.vw:
            row["vw_value"] = format_rational(r.vw_value)
            row["est_vw_differ"] = r.est_vw_differ
        rows.append(row)
    return render_table(rows, args.format)


def cmd_stringy(args) -> str:
    report: dict[str, Any] = {}
    unknown = False
    if args.strata is not None:
        try:
            with open(args.strata, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise SchemaError(f"cannot read {args.strata}: {exc}") from exc
        s = stratification_from_json(text)
        report["source"] = "strata"
    else:
        n = args.n
        if n is None:
            raise UsageError("--model ogrady requires --n")
        if n < 2:
            raise UsageError(f"--n must be >= 2, got {n}")
        a_n = a_table(n)[n]
        unknown = args.e_stable is None
        e_stable = 0 if unknown else args.e_stable
        s = to_stratification(n, stratum_euler_table(n, a_n), e_stable)
        report["source"] = "model"
        report["model"] = args.model
        report["n"] = n
        report["a_n"] = str(a_n)
        report["e_stable"] = "unknown" if unknown else str(e_stable)

    est = stringy_euler(s)
    report["e_st"] = format_rational(est) + (" + e(M^s)" if unknown else "")
    if args.symbolic:
        f = stringy_E_diagonal(s)
        lim = limit_at_one(f)
        if lim != est:
            raise ArithmeticError(f"limit {lim} disagrees with e_st {est}")
        report["E_st"] = str(f)
        report["E_st_numerator"] = [str(c) for c in f.num.coeffs] or ["0"]
        report["E_st_denominator"] = [str(c) for c in f.den.coeffs]
        report["limit_at_one"] = format_rational(lim)
    report["stratification"] = stratification_to_json(s)
    return render_report(report, args.format)


# -- argument parsing --------------------------------------------------------


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _at_least_two(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError(f"must be >= 2, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="stringy-calc",
        description="Exact stringy Euler numbers and the M_{2n} integrality obstruction.",
    )
    sub = p.add_subparsers(dest="command", required=True)
    fmt = dict(choices=["plain", "json", "csv"], default="plain")

    h = sub.add_parser("hilb", help="Euler numbers a_n of K3 Hilbert schemes")
    h.add_argument("--max", type=_nonneg, required=True, metavar="N")
    h.add_argument("--format", **fmt)
    h.set_defaults(func=cmd_hilb)

    o = sub.add_parser("obstruction", help="integrality of n a_n/(2n-3)")
    o.add_argument("--max", type=_at_least_two, required=True, metavar="N")
    o.add_argument("--vw", action="store_true", help="compare with a_{4n-3} + a_n/4")
    o.add_argument("--format", **fmt)
    o.set_defaults(func=cmd_obstruction)

    s = sub.add_parser("stringy", help="stringy Euler number of an arrangement")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--strata", metavar="FILE.json")
    src.add_argument("--model", choices=["ogrady"])
    s.add_argument("--n", type=int)
    s.add_argument("--e-stable", type=int, dest="e_stable", metavar="E")
    s.add_argument("--symbolic", action="store_true")
    s.add_argument("--format", **fmt)
    s.set_defaults(func=cmd_stringy)
    return p


EXIT_CODES = [
    (NotLogTerminal, 3),
    ((SchemaError, BadSubsetKey, InconsistentEpoly), 4),
    ((PoleAtOne, SymbolicPathUnavailable, MissingEpoly), 5),
    (OutOfRange, 2),
]


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(format="%(levelname)s: %(message)s", stream=sys.stderr)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        for types, code in EXIT_CODES:
            if isinstance(exc, types):
                print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
                return code
        raise
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
