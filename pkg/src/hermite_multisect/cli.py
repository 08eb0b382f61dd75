"""
Command-line front end.

    hermite-multisect eval   --family S --j 2 --k 0 --z 1+0i
    hermite-multisect verify [--family G] [--tol 1e-9]
    hermite-multisect table  --family G --format csv --out g.csv
    hermite-multisect bench  --family S --j 4 --k 1 --z 2 --reps 1000

Exit codes: 0 success, 1 tolerance failure, 2 domain or I/O error,
3 series truncation failure.  JSON goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import tempfile

from .core import SeriesControl
from .errors import DomainError, HermiteMultisectError, TruncationError
from .operators import TestFunction
from .sweep import (DEFAULT_RULE_ORDER, FAMILIES, SweepError, SweepSpec,
                    default_spec, default_suite, evaluate_point,
                    records_to_csv, records_to_jsonl, run_sweep, summarize)

EXIT_OK, EXIT_TOLERANCE, EXIT_DOMAIN, EXIT_TRUNCATION = 0, 1, 2, 3


def parse_complex(text: str) -> complex:
    """Parse ``a+bi``, ``a-bi``, ``bi`` or ``a`` (``j`` is accepted for ``i``)."""
    cleaned = text.strip().replace(" ", "").replace("I", "i").replace("i", "j")
    try:
        value = complex(cleaned)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None
    if value != value or abs(value) == float("inf"):
        raise argparse.ArgumentTypeError(f"not a finite complex number: {text!r}")
    return value


def parse_int_list(text: str) -> list[int]:
    """``3``, ``1,2,5`` or an inclusive range ``1..6``."""
    out = []
    try:
        for part in text.split(","):
            if ".." in part:
                lo, hi = part.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer list: {text!r}") from None
    return out


def parse_complex_list(text: str) -> list[complex]:
    return [parse_complex(p) for p in text.split(",")]


def parse_float_list(text: str) -> list[float]:
    try:
        return [float(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of reals: {text!r}") from None


def _control(args) -> SeriesControl:
    return SeriesControl(max_terms=args.max_terms)


def _fn(args) -> TestFunction | None:
    return TestFunction.parse(args.fn) if args.fn else None


def _spec(args, family: str) -> SweepSpec:
    fn = _fn(args)
    base = default_spec(family, fn)
    return SweepSpec(
        family,
        js=args.j or base.js,
        ks=args.k,
        zs=args.z or base.zs,
        xs=args.x or base.xs,
        control=_control(args),
        fn=fn or base.fn,
        rule_order=args.rule_order[0] if args.rule_order else DEFAULT_RULE_ORDER,
    )


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")
    sys.stdout.flush()


def _single_point(args):
    family = args.family
    j = args.j[0] if args.j else (2 if family == "I" else 1)
    k = args.k[0] if args.k else 0
    z = args.z[0] if args.z else 0j
    x = args.x[0] if args.x else 0.0
    if family == "S":
        x = None
    elif family.startswith("K"):
        j, k = {"K-even": (2, 0), "K-odd": (2, 1), "K-combined": (1, 0)}[family]
    return j, k, z, x


def cmd_eval(args) -> int:
    j, k, z, x = _single_point(args)
    fn = _fn(args) or default_spec("I").fn
    order = args.rule_order[0] if args.rule_order else DEFAULT_RULE_ORDER
    rec = evaluate_point(args.family, j, k, z, x, _control(args), fn, order)
    _emit(rec.to_dict())
    return EXIT_OK


def cmd_verify(args) -> int:
    specs = [_spec(args, args.family)] if args.family else default_suite()
    status = EXIT_OK
    for spec in specs:
        records = run_sweep(spec)
        report = summarize(spec.family, records, args.tol, spec.fn)
        _emit(report.to_dict())
        if not report.passed:
            status = EXIT_TOLERANCE
    return status


def cmd_table(args) -> int:
    spec = _spec(args, args.family)
    records = run_sweep(spec)
    text = records_to_csv(records) if args.format == "csv" else records_to_jsonl(records)
    out = os.path.abspath(args.out)
    directory = os.path.dirname(out) or "."
    tmp = None
    try:
        # write-then-rename so a failure never leaves a partial file behind
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".table-", suffix=".tmp")
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except OSError as exc:
        if tmp is not None and os.path.exists(tmp):
            os.unlink(tmp)
        raise DomainError(f"cannot write {args.out}: {exc}") from exc
    _emit({"family": spec.family, "rows": len(records), "format": args.format, "out": args.out})
    return EXIT_OK


def _timing(samples: list[int]) -> dict:
    if len(samples) > 1:
        q1, _, q3 = statistics.quantiles(samples, n=4)
    else:
        q1 = q3 = samples[0]
    return {"median_ns": statistics.median(samples), "iqr_ns": q3 - q1}


def cmd_bench(args) -> int:
    if args.reps < 1:
        raise DomainError(f"--reps must be >= 1, got {args.reps}")
    j, k, z, x = _single_point(args)
    fn = _fn(args) or default_spec("I").fn
    orders = args.rule_order or [DEFAULT_RULE_ORDER]
    if args.family != "I":
        orders = orders[:1]
    runs = []
    for order in orders:
        closed_t, series_t = [], []
        rec = None
        for _ in range(args.reps):
            rec = evaluate_point(args.family, j, k, z, x, _control(args), fn, order)
            closed_t.append(rec.t_closed_ns)
            series_t.append(rec.t_series_ns)
        run = {"closed": _timing(closed_t), "series": _timing(series_t),
               "terms_used": rec.terms_used}
        if args.family == "I":
            run["rule_order"] = order
        runs.append(run)
    out = {"family": args.family, "j": j, "k": k, "z_re": z.real, "z_im": z.imag,
           "x": x, "reps": args.reps}
    if args.family == "I":
        out["fn"] = fn.describe()
        out["runs"] = runs
    else:
        out.update(runs[0])
    _emit(out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermite-multisect",
        description="Closed forms of multisected Hermite and exponential sums, "
                    "checked against their defining series.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, family_required=True):
        p.add_argument("--family", choices=FAMILIES, required=family_required)
        p.add_argument("--j", type=parse_int_list, help="stride: 3, 1,2,5 or 1..6")
        p.add_argument("--k", type=parse_int_list, help="offset: same syntax as --j")
        p.add_argument("--z", "--a", dest="z", type=parse_complex_list,
                       help="complex argument(s) a+bi; for family I the operator scale a")
        p.add_argument("--x", type=parse_float_list, help="real argument(s)")
        p.add_argument("--max-terms", type=int, default=1000)
        p.add_argument("--fn", help="I test function: poly:c0,c1,..  exp:lam  gauss:beta")
        p.add_argument("--rule-order", type=parse_int_list,
                       help=f"quadrature order for family I (default {DEFAULT_RULE_ORDER})")

    p = sub.add_parser("eval", help="evaluate one point by both routes")
    common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="closed form vs series over a grid")
    common(p, family_required=False)
    p.add_argument("--tol", type=float, default=None,
                   help="override the family tolerance on max rel_err")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="write one record per grid point")
    common(p)
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("bench", help="time the closed and series paths")
    common(p)
    p.add_argument("--reps", type=int, default=100)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SweepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TRUNCATION if isinstance(exc.cause, TruncationError) else EXIT_DOMAIN
    except TruncationError as exc:
        print(f"error: {exc} (partial={exc.partial}, terms={exc.terms_used})", file=sys.stderr)
        return EXIT_TRUNCATION
    except HermiteMultisectError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
