"""Command-line front end.

Exit codes: 0 success, 1 verification or estimation failure, 2 usage or
configuration error.
"""
from __future__ import annotations

import argparse
import csv
import io
import math
import os
import sys

import numpy as np

from .functions import ExpressionSyntaxError, entire
from .growth import M_BASED, T_BASED, EstimatorError, RadialGrid, estimate_order, estimate_type
from .scales import ScaleError, check_triple, triple_from_spec, triple_grid

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_grid(text):
    if text is None:
        return RadialGrid()
    try:
        r0, q, count = text.split(",")
        return RadialGrid(float(r0), float(q), int(count))
    except ValueError as exc:
        raise UsageError(f"--grid expects r0,q,count with r0 > 1, q > 1, count >= 16 ({exc})") from exc


def _write_csv(path, columns, rows):
    from .verify.report import _clean, write_atomic
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in _clean([list(r) for r in rows]):
        w.writerow(row)
    write_atomic(path, buf.getvalue())


def _fmt(x):
    return f"{x:.6g}" if isinstance(x, float) and math.isfinite(x) else str(x)


# ---------------------------------------------------------------------------


def cmd_indicators(args):
    f = entire(args.function)
    triple = triple_from_spec(args.triple)
    grid = _parse_grid(args.grid)
    modes = [T_BASED, M_BASED] if args.mode == "both" else [args.mode]
    print(f"f = {f}   triple = {triple}   grid: {grid.describe()}")
    for mode in modes:
        est = estimate_order(f, triple, grid, mode, args.shifted)
        line = (f"{mode:8s} {est.kind}: slope {_fmt(est.value_slope)}  "
                f"tail-sup {_fmt(est.value_tail_sup)}  trend {est.monotone_trend}")
        out = [est]
        sigma = est.value_slope
        if math.isfinite(sigma) and sigma > 0:
            typ = estimate_type(f, triple, sigma, grid, mode, args.shifted)
            line += f"  | {typ.kind}: {_fmt(typ.value_slope)}"
            out.append(typ)
        print(line)
        if args.out:
            os.makedirs(args.out, exist_ok=True)
            for e in out:
                path = os.path.join(args.out, f"{e.kind}_{mode}.csv")
                _write_csv(path, e.columns, e.samples)
    return EXIT_OK


def cmd_verify(args):
    from .verify.suite import apply_overrides, load_default_suite, load_suite, run_suite
    suite = load_default_suite() if args.suite is None else load_suite(args.suite)
    if args.grid is not None:
        g = _parse_grid(args.grid)
        for s in suite.scenarios:
            if s.kind in ("function_indicator", "prop_order_algebra", "prop_type_algebra",
                          "lemma_logderiv", "lemma_wiman_valiron"):
                s.grid = g
    apply_overrides(suite, fan=args.fan, tol=args.tol, threads=args.threads, seed=args.seed)
    if args.seed is not None:
        suite.seed = args.seed
    if not suite.scenarios:
        print("warning: the suite contains no scenarios", file=sys.stderr)
        return EXIT_OK

    def progress(rep):
        print(rep.summary_line(), flush=True)

    result = run_suite(suite, args.out, progress=progress)
    print(result.summary().splitlines()[-1])
    if args.out:
        print(f"reports written to {args.out}")
    return EXIT_OK if result.ok else EXIT_FAIL


def cmd_reduce(args):
    from .odes import LinearODE, ReductionError, reduce_order
    from .odes.reduction import default_points
    ode = LinearODE.from_spec(args.ode)
    pts = default_points(args.points)
    try:
        red = reduce_order(ode, args.solution, check_points=pts)
    except ReductionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    vals = red.coefficient_values(pts)
    cols = ["z_re", "z_im"] + [f"A1_{j}_re" for j in range(red.k)] + [f"A1_{j}_im" for j in range(red.k)]
    rows = [[z.real, z.imag, *v.real, *v.imag] for z, v in zip(pts, vals)]
    print(f"reduced equation of order {red.k} from {ode} with f1 = {args.solution}")
    show = rows if args.all else rows[:: max(1, len(rows) // 10)]
    print("  ".join(f"{c:>12s}" for c in cols))
    for row in show:
        print("  ".join(f"{v:12.6g}" for v in row))
    if red.k:
        spread = np.nanmax(np.abs(vals - vals[:1]), axis=0)
        print("max deviation from the first point per coefficient: "
              + ", ".join(_fmt(float(s)) for s in spread))
    if args.out:
        _write_csv(args.out, cols, rows)
    return EXIT_OK


def cmd_scales_check(args):
    triple = triple_from_spec(args.triple)
    rep = check_triple(triple, triple_grid())
    print(f"{triple}: {rep.tested} {rep.verdict}")
    for p in rep.details.get("problems", []):
        print(f"  {p}")
    for name, r in rep.details.get("ratios", {}).items():
        print(f"  {name}: last {_fmt(r['last'])} (threshold {r['threshold']}), "
              f"non-increasing {r['decreasing']}")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_trace(args):
    from .odes import LinearODE, integrate_ray
    ode = LinearODE.from_spec(args.ode)
    ics = [complex(x) for x in args.ics.split(",")] if args.ics else [1.0] + [0.0] * (ode.k - 1)
    if len(ics) != ode.k:
        raise UsageError(f"--ics needs {ode.k} values")
    radii = np.linspace(0, args.r_max, args.samples + 1)[1:]
    tr = integrate_ray(ode, ics, args.theta, args.r_max, args.tol if args.tol else 1e-10,
                       radii=radii)
    cols = (["theta", "r"] + [f"log_abs_d{j}" for j in range(ode.k)]
            + [f"phase_d{j}" for j in range(ode.k)] + ["renorm_count"])
    la, ph = tr.log_abs, tr.phases
    rows = [[tr.theta, tr.radii[i], *la[i], *ph[i], tr.renorm_count] for i in range(len(tr.radii))]
    if args.out:
        _write_csv(args.out, cols, rows)
    else:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(cols)
        w.writerows(rows)
    print(f"# {tr.terminated_reason}: reached r = {tr.r_reached:.6g} in {tr.steps} steps",
          file=sys.stderr)
    return EXIT_OK if tr.completed else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="abgrowth", description=(
        "Generalized growth order and type of entire functions and of solutions "
        "of linear ODEs with entire coefficients."))
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, *names):
        if "grid" in names:
            sp.add_argument("--grid", help="radial grid r0,q,count (default 4,1.15,40)")
        if "fan" in names:
            sp.add_argument("--fan", type=int, help="number of rays in each fan")
        if "tol" in names:
            sp.add_argument("--tol", type=float, help="integrator tolerance in [1e-12, 1e-6]")
        if "threads" in names:
            sp.add_argument("--threads", type=int, help="worker threads for ray integration")
        if "seed" in names:
            sp.add_argument("--seed", type=int, help="seed for randomized property scenarios")

    sp = sub.add_parser("indicators", help="order and type estimates of an entire function")
    sp.add_argument("function", help='expression in z, e.g. "exp(z^2) + z"')
    sp.add_argument("--triple", default="id,id,id", help="scale triple alpha,beta,gamma")
    sp.add_argument("--mode", choices=[T_BASED, M_BASED, "both"], default="both")
    sp.add_argument("--shifted", action="store_true", help="use the alpha(log) order")
    sp.add_argument("--out", help="directory for CSV samples")
    common(sp, "grid")
    sp.set_defaults(run=cmd_indicators)

    sp = sub.add_parser("verify", help="run a scenario suite (default: the bundled suite)")
    sp.add_argument("suite", nargs="?", help="suite JSON file")
    sp.add_argument("--out", help="directory for report JSON, evidence CSV and summary")
    common(sp, "grid", "fan", "tol", "threads", "seed")
    sp.set_defaults(run=cmd_verify)

    sp = sub.add_parser("reduce", help="reduce an ODE's order by a known solution")
    sp.add_argument("ode", help='coefficients "A0; A1; ...; A_{k-1}"')
    sp.add_argument("solution", help="closed-form solution f1")
    sp.add_argument("--points", type=int, default=100, help="number of sample points")
    sp.add_argument("--all", action="store_true", help="print every sample point")
    sp.add_argument("--out", help="CSV file for the reduced coefficients")
    sp.set_defaults(run=cmd_reduce)

    sp = sub.add_parser("scales-check", help="check the class and ratio conditions of a triple")
    sp.add_argument("triple", help="scale triple alpha,beta,gamma, e.g. log,id,id")
    sp.set_defaults(run=cmd_scales_check)

    sp = sub.add_parser("trace", help="integrate one solution along a ray and dump CSV")
    sp.add_argument("ode", help='coefficients "A0; A1; ...; A_{k-1}"')
    sp.add_argument("--ics", help="initial values f(0),f'(0),... (default 1,0,...)")
    sp.add_argument("--theta", type=float, default=0.0, help="ray direction")
    sp.add_argument("--r-max", type=float, default=10.0, help="end radius")
    sp.add_argument("--samples", type=int, default=64, help="number of sample radii")
    sp.add_argument("--out", help="CSV file (default: stdout)")
    common(sp, "tol")
    sp.set_defaults(run=cmd_trace)
    return p


def main(argv=None):
    from .verify.scenarios import ConfigError
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.run(args)
    except ExpressionSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ConfigError, ScaleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EstimatorError as exc:
        print(f"estimation failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ArithmeticError, RuntimeError, ValueError) as exc:
        print(f"failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
