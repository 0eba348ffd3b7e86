"""Command-line front end.

Subcommands::

    transform          apply hilbert / cauchy / dz / dzbar to a grid file
    solve              run the fixed-point solver, emit a JSON report
    bench-convergence  per-iteration deltas for the quartic test case
    bench-time         wall-clock comparison of schemes over grids
    bench-accuracy     scheme 1/2 error against the exact scheme-3 reference
    oracle-check       closed-form monomial transform vs quadrature oracle
    bench-backends     compiled vs pure-NumPy sweep kernel timings

Exit codes: 0 success, 1 numeric failure (divergence, oracle mismatch),
2 input error (bad flags, malformed files).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from . import bench as bench_mod
from .backend import BACKEND
from .derivative import DifferenceStencil, dz_coefficients, dzbar_coefficients
from .exact import (
    OracleConvergenceError,
    PolyDifferential,
    PolynomialGrowthError,
    monomial_hilbert,
    quartic_mu,
    sample_poly,
    scheme3_iterate,
    singular_quadrature_oracle,
)
from .grid import analyze, build_grid, sup_distance, synthesize
from .hilbert import transform_scheme1
from .io import read_grid_function, read_mu_file, write_grid_function
from .piecewise import RadialModel
from .solver import DivergenceError, SolveConfig, iterate
from .cauchy import cauchy_coefficients, evaluate_potential, normalize_at_origin

QUARTIC_DEFAULT = "quartic:0.5,1.0"
TABLE_STEPS = (5, 10, 20, 50)


def _parse_grid(spec: str):
    try:
        n_s, m_s = spec.lower().split("x")
        return int(n_s), int(m_s)
    except ValueError as exc:
        raise ValueError(f"grid must look like 500x256, got {spec!r}") from exc


def _parse_mu(spec: str):
    if spec == "zero":
        return ("zero",)
    if spec.startswith("quartic:"):
        try:
            a_s, s_s = spec[len("quartic:"):].split(",")
            return ("quartic", float(a_s), float(s_s))
        except ValueError as exc:
            raise ValueError(f"expected quartic:a,s, got {spec!r}") from exc
    if spec.startswith("file:"):
        return ("file", spec[len("file:"):])
    raise ValueError(f"mu must be 'quartic:a,s', 'file:PATH' or 'zero', got {spec!r}")


def _resolve_mu(args, grid=None):
    """Returns (mu_poly_or_None, mu_grid_function_or_None, support_radius)."""
    kind = _parse_mu(args.mu)
    if kind[0] == "quartic":
        poly = quartic_mu(kind[1], kind[2])
        return poly, sample_poly(poly, grid) if grid is not None else None, poly.support_radius
    if kind[0] == "zero":
        radius = args.radius if args.radius else 1.0
        poly = PolyDifferential(radius, {})
        return poly, sample_poly(poly, grid) if grid is not None else None, radius
    loaded = read_mu_file(kind[1])
    if isinstance(loaded, PolyDifferential):
        return loaded, sample_poly(loaded, grid) if grid is not None else None, loaded.support_radius
    return None, loaded, loaded.grid.support_radius


def _default_radius(args) -> float:
    if args.radius:
        return args.radius
    kind = _parse_mu(args.mu)
    if kind[0] == "quartic":
        return float(np.sqrt(2.0) * kind[2])
    return 1.0


def _write_table(rows: list[dict], path_base: str, fmt: str):
    wrote = []
    if fmt in ("csv", "both") and rows:
        path = path_base if path_base.endswith(".csv") else path_base + ".csv"
        with open(path, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
            writer.writeheader()
            writer.writerows(rows)
        wrote.append(path)
    if fmt in ("json", "both"):
        path = path_base if path_base.endswith(".json") else path_base + ".json"
        with open(path, "w") as fh:
            json.dump(rows, fh, indent=1)
        wrote.append(path)
    return wrote


def _print_rows(rows: list[dict]):
    for row in rows:
        print("  ".join(f"{k}={v}" for k, v in row.items()))


def cmd_transform(args) -> int:
    f = read_grid_function(args.input)
    model = RadialModel.parse(args.model)
    stencil = DifferenceStencil.parse(args.stencil)
    if args.op == "hilbert":
        out = transform_scheme1(f, model)
    elif args.op == "cauchy":
        cc = normalize_at_origin(cauchy_coefficients(analyze(f), model))
        out = evaluate_potential(cc)
    elif args.op == "dz":
        out = synthesize(dz_coefficients(analyze(f), stencil))
    else:
        out = synthesize(dzbar_coefficients(analyze(f), stencil))
    write_grid_function(out, args.out, args.format)
    print(f"{args.op}: {args.input} -> {args.out}")
    return 0


def cmd_solve(args) -> int:
    mu_poly, mu_grid_fn, radius = None, None, _default_radius(args)
    if _parse_mu(args.mu)[0] == "file":
        mu_poly, mu_grid_fn, radius = _resolve_mu(args)
    if mu_grid_fn is not None:
        grid = mu_grid_fn.grid
    else:
        n, m = _parse_grid(args.grid)
        grid = build_grid(n, m, radius, args.outer_factor)
    cfg = SolveConfig(
        scheme=args.scheme,
        model=RadialModel.parse(args.model),
        max_iterations=args.iters,
        tolerance=args.tol,
        initial=args.init,
        stencil=DifferenceStencil.parse(args.stencil),
        grid=grid if args.scheme == 3 else None,
    )
    if mu_poly is None and mu_grid_fn is None:
        mu_poly, mu_grid_fn, _ = _resolve_mu(args, grid)
    elif mu_poly is not None and mu_grid_fn is None:
        mu_grid_fn = sample_poly(mu_poly, grid)
    if args.scheme == 3:
        if mu_poly is None:
            raise ValueError("scheme 3 needs a polynomial dilatation (quartic:... or a poly file)")
        h, report = iterate(mu_poly, cfg)
    else:
        h, report = iterate(mu_grid_fn, cfg)
    payload = {"config": cfg.describe() | {"grid": f"{grid.radial_count}x{grid.angular_count}",
                                           "radius": grid.support_radius, "mu": args.mu},
               **report.to_dict()}
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=1)
        print(f"report -> {args.out}")
    else:
        json.dump(payload, sys.stdout, indent=1)
        print()
    if args.solution_out:
        write_grid_function(h, args.solution_out, args.format)
        print(f"solution -> {args.solution_out}")
    return 0


def _extended_available() -> bool:
    return np.finfo(np.longdouble).eps < 1e-18


def cmd_bench_convergence(args) -> int:
    n, m = _parse_grid(args.grid)
    radius = _default_radius(args)
    grid = build_grid(n, m, radius, args.outer_factor)
    mu_poly, mu_grid_fn, _ = _resolve_mu(args, grid)
    deltas = {}
    for scheme in (1, 2):
        cfg = SolveConfig(scheme=scheme, model=RadialModel.parse(args.model),
                          max_iterations=args.iters, tolerance=1e-300, initial=args.init,
                          stencil=DifferenceStencil.parse(args.stencil))
        _, rep = iterate(mu_grid_fn, cfg)
        deltas[f"scheme{scheme}"] = rep.deltas
        print(f"scheme {scheme}: {rep.iterations} steps, termination={rep.termination}")
    if mu_poly is not None and args.scheme3:
        if _extended_available():
            mu3 = PolyDifferential(
                np.longdouble(mu_poly.support_radius),
                {pq: np.clongdouble(c) for pq, c in mu_poly.terms.items()},
            )
            note = "extended precision"
        else:
            mu3, note = mu_poly, "double precision"
        cfg3 = SolveConfig(scheme=3, max_iterations=args.iters, tolerance=1e-300,
                           initial=args.init, grid=grid)
        try:
            _, rep3 = iterate(mu3, cfg3)
            deltas["scheme3"] = rep3.deltas
            print(f"scheme 3 reference ({note}): {rep3.iterations} steps, "
                  f"termination={rep3.termination}")
        except PolynomialGrowthError as exc:
            print(f"scheme 3 reference skipped: {exc}")
    rows = []
    for step in TABLE_STEPS:
        row = {"n": step}
        for name, seq in deltas.items():
            row[name] = f"{seq[step - 1]:.3e}" if len(seq) >= step else ""
        rows.append(row)
    _print_rows(rows)
    if args.out:
        print("wrote", ", ".join(_write_table(rows, args.out, args.format_table)))
    return 0


def cmd_bench_time(args) -> int:
    grids = [(_parse_grid(s)) for s in args.grids.split(",")]
    if args.full:
        grids += [(5000, 1024), (7000, 2048)]
    radius = _default_radius(args)
    rows = []
    for n, m in grids:
        grid = build_grid(n, m, radius, args.outer_factor)
        _, mu_grid_fn, _ = _resolve_mu(args, grid)
        row = {"N": n, "M": m}
        for scheme in (1, 2):
            cfg = SolveConfig(scheme=scheme, model=RadialModel.parse(args.model),
                              max_iterations=args.iters, tolerance=1e-300, initial=args.init,
                              stencil=DifferenceStencil.parse(args.stencil))
            secs = bench_mod.median_time(lambda: iterate(mu_grid_fn, cfg), repeats=args.reps)
            row[f"scheme{scheme}_s"] = round(secs, 4)
        row["ratio_2_over_1"] = round(row["scheme2_s"] / row["scheme1_s"], 3)
        rows.append(row)
    for prev, cur in zip(rows, rows[1:]):
        cur["scaling_vs_prev"] = round(cur["scheme1_s"] / prev["scheme1_s"], 3)
    _print_rows(rows)
    if args.out:
        print("wrote", ", ".join(_write_table(rows, args.out, args.format_table)))
    return 0


def cmd_bench_accuracy(args) -> int:
    grids = [(_parse_grid(s)) for s in args.grids.split(",")]
    radius = _default_radius(args)
    rows = []
    for n, m in grids:
        grid = build_grid(n, m, radius, args.outer_factor)
        mu_poly, mu_grid_fn, _ = _resolve_mu(args, grid)
        if mu_poly is None:
            raise ValueError("bench-accuracy needs a polynomial dilatation for the reference")
        h3 = sample_poly(scheme3_iterate(mu_poly, args.iters, initial=args.init), grid)
        row = {"N": n, "M": m}
        for scheme in (1, 2):
            cfg = SolveConfig(scheme=scheme, model=RadialModel.parse(args.model),
                              max_iterations=args.iters, tolerance=1e-300, initial=args.init,
                              stencil=DifferenceStencil.parse(args.stencil))
            h, _ = iterate(mu_grid_fn, cfg)
            row[f"sup_scheme{scheme}_vs_3"] = f"{sup_distance(h, h3):.3e}"
        rows.append(row)
    _print_rows(rows)
    if args.out:
        print("wrote", ", ".join(_write_table(rows, args.out, args.format_table)))
    return 0


def cmd_oracle_check(args) -> int:
    pairs = []
    if args.pairs.strip():
        for part in args.pairs.split(";"):
            p_s, q_s = part.split(",")
            pairs.append((int(p_s), int(q_s)))
    rng = np.random.default_rng(args.seed)
    radius = args.radius
    rows = []
    violations = 0
    for p, q in pairs:
        f = lambda z, p=p, q=q: z**p * np.conj(z) ** q
        worst = 0.0
        worst_err = 0.0
        for _ in range(args.points):
            theta = 2 * np.pi * rng.random()
            for rr in (0.03 + 0.92 * rng.random(), 1.05 + 2.0 * rng.random()):
                z = rr * radius * np.exp(1j * theta)
                val, err = singular_quadrature_oracle(f, z, radius)
                diff = abs(val - monomial_hilbert(p, q, radius, z))
                worst = max(worst, diff)
                worst_err = max(worst_err, err)
                if diff > err:
                    violations += 1
        rows.append({"p": p, "q": q, "max_diff": f"{worst:.3e}", "max_reported": f"{worst_err:.3e}"})
    _print_rows(rows)
    if args.out:
        print("wrote", ", ".join(_write_table(rows, args.out, args.format_table)))
    if violations:
        print(f"FAIL: {violations} point(s) exceeded the oracle's reported error", file=sys.stderr)
        return 1
    print(f"ok: all points within the oracle's reported error ({2 * args.points} per pair)")
    return 0


def cmd_bench_backends(args) -> int:
    grids = [(_parse_grid(s)) for s in args.grids.split(",")]
    rows = bench_mod.compare_backends(grids, RadialModel.parse(args.model),
                                      repeats=args.reps, seed=args.seed)
    _print_rows(rows)
    print(f"active backend: {BACKEND}")
    if args.out:
        print("wrote", ", ".join(_write_table(rows, args.out, args.format_table)))
    return 0


def _add_common(p, *, grid=None, mu=True, iters=None, init="mu"):
    if grid:
        p.add_argument("--grid", default=grid, help="radial x angular size, e.g. 500x256")
    p.add_argument("--radius", type=float, default=0.0,
                   help="support radius R (default: from the dilatation)")
    p.add_argument("--outer-factor", type=float, default=1.0,
                   help="grid extends to outer-factor * R")
    if mu:
        p.add_argument("--mu", default=QUARTIC_DEFAULT,
                       help="dilatation: quartic:a,s | file:PATH | zero")
    if iters is not None:
        p.add_argument("--iters", type=int, default=iters, help="iteration count")
    p.add_argument("--init", choices=("zero", "mu"), default=init, help="initial iterate")
    p.add_argument("--model", default="linear", help="radial model: const | linear")
    p.add_argument("--stencil", default="right2", help="derivative stencil: right2 | central")


def _add_table_out(p):
    p.add_argument("--out", default="", help="output table base path")
    p.add_argument("--format-table", choices=("csv", "json", "both"), default="both")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="beltrami",
                                     description="Beltrami equation solver on circular grids")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="transform a grid-function file")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--op", choices=("hilbert", "cauchy", "dz", "dzbar"), required=True)
    p.add_argument("--model", default="linear")
    p.add_argument("--stencil", default="right2")
    p.add_argument("--out", "-o", required=True)
    p.add_argument("--format", choices=("csv", "json"), default=None)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("solve", help="solve the Beltrami equation")
    _add_common(p, grid="500x512", iters=50)
    p.add_argument("--scheme", type=int, choices=(1, 2, 3), default=1)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--out", default="", help="JSON report path (default: stdout)")
    p.add_argument("--solution-out", default="", help="optional grid file for the final iterate")
    p.add_argument("--format", choices=("csv", "json"), default=None)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench-convergence", help="per-iteration delta table")
    _add_common(p, grid="500x512", iters=50, init="zero")
    p.add_argument("--scheme3", action=argparse.BooleanOptionalAction, default=True,
                   help="include the exact polynomial reference column")
    _add_table_out(p)
    p.set_defaults(func=cmd_bench_convergence)

    p = sub.add_parser("bench-time", help="scheme timing over grids")
    p.add_argument("--grids", default="500x256,1000x512")
    p.add_argument("--full", action="store_true", help="add the 5000x1024 and 7000x2048 rows")
    p.add_argument("--reps", type=int, default=3)
    _add_common(p, iters=10, init="zero")
    _add_table_out(p)
    p.set_defaults(func=cmd_bench_time)

    p = sub.add_parser("bench-accuracy", help="scheme 1/2 vs exact reference")
    p.add_argument("--grids", default="500x256")
    _add_common(p, iters=10, init="zero")
    _add_table_out(p)
    p.set_defaults(func=cmd_bench_accuracy)

    p = sub.add_parser("oracle-check", help="monomial transform vs quadrature oracle")
    p.add_argument("--pairs", default="0,0;1,0;0,1;2,1;1,2;2,2")
    p.add_argument("--points", type=int, default=20, help="random points per pair and side")
    p.add_argument("--radius", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    _add_table_out(p)
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("bench-backends", help="compiled vs NumPy sweep kernels")
    p.add_argument("--grids", default="500x256,1000x512")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--model", default="linear")
    _add_table_out(p)
    p.set_defaults(func=cmd_bench_backends)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DivergenceError, OracleConvergenceError, PolynomialGrowthError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
