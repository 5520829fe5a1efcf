"""Batch command line: coefficient tables, evaluations, checks, sweeps.

Every subcommand emits deterministic CSV (scientific notation, 12
significant digits, comma separator, ``\\n`` line endings, header row);
re-running a config byte-reproduces the file.  Exit codes: 0 success,
2 validation error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import fracderiv, fracint, interval, symbol, toeplitz, wienerhopf
from .functions import parse_function
from .quadrature import QuadratureError
from .specialfn import GammaPoleError


def _fmt(x) -> str:
    x = float(x)
    if math.isnan(x):
        return "nan"
    return f"{x:.11e}"


def _write_csv(path: str | None, header: list[str], rows: list[list],
               comments: list[str] | None = None) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(c if isinstance(c, str) else _fmt(c) for c in row))
    for c in comments or []:
        lines.append("# " + c)
    text = "\n".join(lines) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _write_gnuplot(args, ycols: list[int], title: str) -> None:
    if not args.gnuplot:
        return
    if args.output is None:
        raise ValueError("--gnuplot requires --output")
    plt = args.output + ".plt"
    plots = ", ".join(
        f"'{args.output}' using 1:{c} with linespoints title 'col{c}'"
        for c in ycols)
    with open(plt, "w", newline="") as fh:
        fh.write("set datafile separator ','\n")
        fh.write("set key autotitle columnhead\n")
        fh.write(f"set title '{title}'\n")
        fh.write(f"plot {plots}\n")


def _int_list(text: str) -> list[int]:
    return [int(v) for v in text.split(",")]


def _float_list(text: str) -> list[float]:
    return [float(v) for v in text.split(",")]


def cmd_coeffs(args) -> int:
    spec = symbol.SymbolSpec(args.alpha, args.R, args.variant)
    n_max = args.n_max
    table = symbol.fourier_coeff_table(spec, n_max, args.tol)
    grid = 1 << 14
    while grid < 4 * n_max:
        grid *= 2
    if args.R >= 1.0:
        grid = max(grid, 1 << 18)  # aliasing decays only algebraically at R = 1
    fft = symbol.fourier_coeff_fft(spec, grid, n_max)
    rows = []
    for n in range(-n_max, n_max + 1):
        s = table.coeff(n)
        f = fft.coeff(n)
        if n != 0 and spec.variant == "lower":
            asym = symbol.asymptotic_coeff(args.alpha, n) * args.R ** abs(n)
            ratio = s.real / asym if asym != 0 else float("nan")
        else:
            asym, ratio = float("nan"), float("nan")
        rows.append([str(n), s.real, s.imag, f.real, f.imag, asym, ratio])
    _write_csv(args.output,
               ["n", "re_series", "im_series", "re_fft", "im_fft",
                "asymptotic", "ratio"], rows)
    _write_gnuplot(args, [2, 6], "fourier coefficients")
    return 0


def cmd_deriv(args) -> int:
    f = parse_function(args.fn)
    oracle = (f.dalpha(args.alpha, args.x) if f.dalpha is not None
              else fracderiv.marchaud_lower(f, args.alpha, args.x))
    rows = []
    for N in args.N:
        v = fracderiv.dalpha_grid(f, args.alpha, args.x, N, args.R)
        rel = abs(v - oracle) / max(abs(oracle), 1e-300)
        rows.append([str(N), v.real, v.imag, oracle, rel])
    _write_csv(args.output, ["N", "re_grid", "im_grid", "oracle", "rel_error"],
               rows)
    _write_gnuplot(args, [5], "derivative convergence")
    return 0


def cmd_integ(args) -> int:
    f = parse_function(args.fn)
    oracle = (f.jalpha(args.alpha, args.x) if f.jalpha is not None
              else fracint.rl_integral(f, args.alpha, args.x))
    rows = []
    for N in args.N:
        v = fracint.jalpha_grid(f, args.alpha, args.x, N, args.R)
        rel = abs(v - oracle) / max(abs(oracle), 1e-300)
        rows.append([str(N), v.real, v.imag, oracle, rel])
    _write_csv(args.output, ["N", "re_grid", "im_grid", "oracle", "rel_error"],
               rows)
    _write_gnuplot(args, [5], "integral convergence")
    return 0


def cmd_invert_check(args) -> int:
    rows = []
    for N in args.N:
        fct = wienerhopf.factor(args.alpha, args.R, N=N)
        op = toeplitz.build(symbol.SymbolSpec(args.alpha, args.R, "upper"), N)
        worst = 0.0
        for j in range(N + 1):
            col_fct = wienerhopf.inverse_column(fct, j, N)
            rhs = np.zeros(N + 1, dtype=complex)
            rhs[j] = 1.0
            col_dense = toeplitz.solve(op, rhs)
            worst = max(worst, float(np.max(np.abs(col_fct - col_dense))))
        bound = wienerhopf.hankel_norm(fct, dim=min(fct.M, 4 * N + 64))
        rows.append([str(N), worst, bound])
    _write_csv(args.output, ["N", "max_abs_diff", "hankel_norm"], rows)
    _write_gnuplot(args, [2], "inverse-section agreement")
    return 0


def cmd_solve(args) -> int:
    psi = parse_function(args.fn)
    y = fracint.solve_dirichlet(psi, args.alpha, args.N, args.tol)
    resid = fracint.dirichlet_residual(y, args.alpha, psi)
    mid = fracint.j_tilde_integral(psi, args.alpha, 0.5, args.tol)
    k_mid = args.N // 2
    comments = [
        f"interior_residual_sup = {_fmt(resid)}",
        f"two_route_gap_at_0.5 = {_fmt(abs(y.samples[k_mid].real - mid))}",
    ]
    if args.uncalibrated:
        lit = fracint.j_tilde_integral(psi, args.alpha, 0.5, args.tol,
                                       uncalibrated=True)
        comments.append(f"uncalibrated_at_0.5 = {_fmt(lit)}")
    rows = [[str(j), j / args.N, y.samples[j].real]
            for j in range(args.N + 1)]
    _write_csv(args.output, ["j", "x", "y"], rows, comments)
    _write_gnuplot(args, [3], "Dirichlet solution")
    return 0


def cmd_line(args) -> int:
    f = parse_function(args.fn)
    support = tuple(args.support) if args.support else None
    rows = []
    for x in args.x:
        jval = interval.j_alpha_inf(f, args.alpha, x, args.tol, support=support)
        lo = support[0] if support else f.support[0]

        def jfun(u, _lo=lo):
            u = np.asarray(u, dtype=float)
            flat = np.atleast_1d(u)
            out = np.array([
                interval.j_alpha_inf(f, args.alpha, float(v), args.tol,
                                     support=support)
                for v in flat])
            return out.reshape(u.shape) if u.ndim else float(out[0])

        round_trip = interval.d_alpha_inf(jfun, args.alpha, x, args.tol,
                                          support=(lo, math.inf))
        target = float(f(x))
        rows.append([_fmt(x), jval, round_trip, target,
                     abs(round_trip - target)])
    _write_csv(args.output,
               ["x", "j_alpha_inf", "d_of_j", "f", "abs_error"], rows)
    _write_gnuplot(args, [5], "whole-line roundtrip")
    return 0


def cmd_converge(args) -> int:
    f = parse_function(args.fn)
    if args.op == "deriv":
        oracle = (f.dalpha(args.alpha, args.x) if f.dalpha is not None
                  else fracderiv.marchaud_lower(f, args.alpha, args.x))
        values = [fracderiv.dalpha_grid(f, args.alpha, args.x, N, args.R).real
                  for N in args.N]
    else:
        oracle = (f.jalpha(args.alpha, args.x) if f.jalpha is not None
                  else fracint.rl_integral(f, args.alpha, args.x))
        values = [fracint.jalpha_grid(f, args.alpha, args.x, N, args.R).real
                  for N in args.N]
    rows = [[str(N), v, oracle, abs(v - oracle)]
            for N, v in zip(args.N, values)]
    comments = []
    if args.extrapolate and len(values) >= 2:
        r = args.N[-1] / args.N[-2]
        ext = values[-1] + (values[-1] - values[-2]) / (r - 1.0)
        comments.append(f"richardson = {_fmt(ext)}")
    _write_csv(args.output, ["N", "value", "oracle", "abs_error"], rows,
               comments)
    _write_gnuplot(args, [4], "convergence sweep")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fractoeplitz",
        description="Fractional derivatives/integrals as Toeplitz limits.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, *, R=True, tol=True):
        p.add_argument("--alpha", type=float, required=True)
        if R:
            p.add_argument("--R", type=float, default=1.0)
        if tol:
            p.add_argument("--tol", type=float, default=1e-10)
        p.add_argument("--output", default=None)
        p.add_argument("--gnuplot", action="store_true")

    p = sub.add_parser("coeffs", help="Fourier coefficient table")
    common(p)
    p.add_argument("--n-max", type=int, required=True, dest="n_max")
    p.add_argument("--variant", choices=symbol.VARIANTS, default="lower")
    p.set_defaults(run=cmd_coeffs)

    p = sub.add_parser("deriv", help="grid fractional derivative sweep")
    common(p)
    p.add_argument("--fn", required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--N", type=_int_list, required=True)
    p.set_defaults(run=cmd_deriv)

    p = sub.add_parser("integ", help="grid fractional integral sweep")
    common(p)
    p.add_argument("--fn", required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--N", type=_int_list, required=True)
    p.set_defaults(run=cmd_integ)

    p = sub.add_parser("invert-check",
                       help="factorization inverse vs dense solve")
    common(p)
    p.add_argument("--N", type=_int_list, required=True)
    p.set_defaults(run=cmd_invert_check)

    p = sub.add_parser("solve", help="Dirichlet fractional BVP")
    common(p, R=False)
    p.add_argument("--fn", required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--uncalibrated", action="store_true")
    p.set_defaults(run=cmd_solve)

    p = sub.add_parser("line", help="whole-line operators and roundtrip")
    common(p, R=False)
    p.add_argument("--fn", required=True)
    p.add_argument("--x", type=_float_list, required=True)
    p.add_argument("--support", type=_float_list, default=None)
    p.set_defaults(run=cmd_line)

    p = sub.add_parser("converge", help="N-sweep with optional extrapolation")
    common(p)
    p.add_argument("--op", choices=["deriv", "integ"], default="deriv")
    p.add_argument("--fn", required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--N", type=_int_list, required=True)
    p.add_argument("--extrapolate", action="store_true")
    p.set_defaults(run=cmd_converge)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.run(args)
    except (ValueError, GammaPoleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ArithmeticError, QuadratureError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
