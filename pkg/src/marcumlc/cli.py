"""Command line front end.

Exit codes: 0 ok, 2 usage or domain error, 3 numerical failure,
4 an asserted property failed.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import harness
from .concavity import (classify_shape, h, l, lemma2_statistic,
                        log_density_curvature)
from .errors import ConvergenceError, DomainError, ShapeError
from .marcum import METHODS, TOL_RANGE, marcum_q
from .nu0 import MIN_TOL, solve_nu0
from .special_fn import ratio_values

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_REGRESSION = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _num(x: float, fmt: str) -> str:
    return format(x, ".17g" if fmt == "csv" else ".8g")


def _emit(fields, fmt):
    print(("," if fmt == "csv" else " ").join(fields))


def _require(cond: bool, flag: str, msg: str):
    if not cond:
        raise UsageError(f"{flag} {msg}")


def _finite(args, *flags):
    for flag in flags:
        v = getattr(args, flag.lstrip("-").replace("-", "_"))
        if v is None:
            continue
        vals = v if isinstance(v, list) else [v]
        _require(all(math.isfinite(x) for x in vals), flag, "must be finite")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_eval(args) -> int:
    _finite(args, "--nu", "--a", "--b", "--tol")
    _require(args.nu > 0, "--nu", "must be > 0")
    _require(args.a >= 0, "--a", "must be >= 0")
    _require(args.b >= 0, "--b", "must be >= 0")
    _require(TOL_RANGE[0] <= args.tol <= TOL_RANGE[1], "--tol",
             f"must lie in [{TOL_RANGE[0]:g}, {TOL_RANGE[1]:g}]")
    _require(args.method != "gamma_closed_form" or args.a == 0, "--method",
             "gamma_closed_form requires --a 0")
    res = marcum_q(args.nu, args.a, args.b, args.method, args.tol)
    _emit([_num(res.value, args.format), _num(res.abs_err, args.format), res.method], args.format)
    return EXIT_OK


def cmd_diag(args) -> int:
    _finite(args, "--nu", "--t", "--a")
    _require(args.nu > 0, "--nu", "must be > 0")
    _require(args.t > 0, "--t", "must be > 0")
    _require(args.a is None or args.a >= 0, "--a", "must be >= 0")
    nu, t, fmt = args.nu, args.t, args.format
    rows = [("r", float(ratio_values(nu, t))), ("h", h(nu, t)), ("l", l(nu, t))]
    r = rows[0][1]
    rows.insert(1, ("r_prime", 1.0 - (2 * nu - 1) / t * r - r * r))
    if args.a is not None:
        rows.append(("psi", lemma2_statistic(nu, args.a, t)))
        if args.a > 0:
            rows.append(("curvature", log_density_curvature(nu, args.a, t)))
    for name, value in rows:
        _emit([name, _num(value, fmt)], fmt)
    if args.shape:
        _require(args.a is not None, "--shape", "needs --a")
        rep = classify_shape(nu, args.a)
        mode = rep.mode_location if isinstance(rep.mode_location, str) else _num(rep.mode_location, fmt)
        _emit(["mode", mode], fmt)
        _emit(["rising_logconcave", rep.rising_logconcave], fmt)
        _emit(["declining_logconcave", rep.declining_logconcave], fmt)
    return EXIT_OK


def cmd_nu0(args) -> int:
    _finite(args, "--tol")
    _require(args.tol >= MIN_TOL, "--tol", f"must be >= {MIN_TOL:g} (double precision limit)")
    _require(args.max_iter > 0, "--max-iter", "must be positive")
    res = solve_nu0(args.tol, args.max_iter)
    _emit([_num(res.root, args.format), _num(res.residual, args.format), str(res.iterations)],
          args.format)
    return EXIT_OK


def _write_reports(reports, out, fmt_json=None) -> int:
    text = harness.to_csv(reports)
    summary = harness.summary_text(reports)
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
        print(summary)
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    if fmt_json:
        with open(fmt_json, "w") as fh:
            fh.write(harness.summary_json(reports) + "\n")
    errors = [r for r in reports if r.verdict == "error"]
    if errors:
        for r in errors:
            print(f"error: {r.property_id}: {r.error}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK if harness.suite_passed(reports) else EXIT_REGRESSION


def cmd_scan(args) -> int:
    _finite(args, "--nu", "--a", "--b-lo", "--b-hi", "--t1", "--t2")
    prop = args.property
    _require(all(x > 0 for x in args.nu or []), "--nu", "values must be > 0")
    _require(all(x >= 0 for x in args.a or []), "--a", "values must be >= 0")
    _require(args.n >= 3, "--n", "must be >= 3")
    b_grid: tuple = ()
    if args.b_lo is not None or args.b_hi is not None:
        _require(args.b_lo is not None and args.b_hi is not None, "--b-lo/--b-hi",
                 "must be given together")
        _require(0 <= args.b_lo < args.b_hi, "--b-lo/--b-hi", "need 0 <= b-lo < b-hi")
        b_grid = tuple(np.linspace(args.b_lo, args.b_hi, args.n))
    if prop == "tp2":
        _require(args.t1 is not None, "--t1", "is required for tp2")
        t2 = args.t1 if args.t2 is None else args.t2
        _require(0 < args.t1 <= t2, "--t1/--t2", "need 0 < t1 <= t2")
        config = harness.ScanConfig(prop, t1=args.t1, t2=t2)
    else:
        if prop == "small-b" and b_grid:
            _require(args.b_hi <= 0.2 and args.b_lo > 0, "--b-lo/--b-hi",
                     "small-b grids must lie in (0, 0.2]")
            b_grid = tuple(np.geomspace(args.b_hi, args.b_lo, args.n))
        config = harness.ScanConfig(prop, nu_grid=args.nu or (), a_grid=args.a or (),
                                    b_grid=b_grid)
    return _write_reports(harness.run_suite([config]), args.out, args.json)


def cmd_suite(args) -> int:
    _require(args.workers >= 1, "--workers", "must be >= 1")
    reports = harness.run_suite(harness.default_suite(), workers=args.workers)
    return _write_reports(reports, args.out, args.json)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="marcumlc",
                                description="Marcum Q evaluation and log-concavity checks")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("plain", "csv"), default="plain")

    e = sub.add_parser("eval", help="evaluate Q_nu(a, b)")
    e.add_argument("--nu", type=float, required=True)
    e.add_argument("--a", type=float, required=True)
    e.add_argument("--b", type=float, required=True)
    e.add_argument("--method", choices=METHODS, default="auto")
    e.add_argument("--tol", type=float, default=1e-10)
    fmt(e)
    e.set_defaults(func=cmd_eval)

    d = sub.add_parser("diag", help="Bessel ratio and density diagnostics at one point")
    d.add_argument("--nu", type=float, required=True)
    d.add_argument("--t", type=float, required=True)
    d.add_argument("--a", type=float)
    d.add_argument("--shape", action="store_true", help="also classify the density shape")
    fmt(d)
    d.set_defaults(func=cmd_diag)

    n = sub.add_parser("nu0", help="solve for the critical order nu_0")
    n.add_argument("--tol", type=float, default=1e-12)
    n.add_argument("--max-iter", type=int, default=200)
    fmt(n)
    n.set_defaults(func=cmd_nu0)

    s = sub.add_parser("scan", help="run one verification scan")
    s.add_argument("--property", required=True, choices=harness.PROPERTIES)
    s.add_argument("--nu", type=float, nargs="+")
    s.add_argument("--a", type=float, nargs="+")
    s.add_argument("--b-lo", type=float)
    s.add_argument("--b-hi", type=float)
    s.add_argument("--n", type=int, default=harness.DEFAULT_N)
    s.add_argument("--t1", type=float)
    s.add_argument("--t2", type=float)
    s.add_argument("--out", help="CSV output path (stdout if omitted)")
    s.add_argument("--json", help="write a JSON summary here")
    s.set_defaults(func=cmd_scan)

    u = sub.add_parser("suite", help="run the full verification suite")
    u.add_argument("--default", action="store_true", help="default grids (the only choice)")
    u.add_argument("--workers", type=int, default=1)
    u.add_argument("--out", help="CSV output path (stdout if omitted)")
    u.add_argument("--json", help="write a JSON summary here")
    u.set_defaults(func=cmd_suite)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, ShapeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceError, OverflowError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
