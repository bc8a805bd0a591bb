"""Command-line front end: file-emitting subcommands over the library.

Every numeric value in the output comes from a library call; the CLI only
parses flags, shapes rows, and formats them.  CSV cells print floats with
17 significant digits so outputs are lossless and byte-identical across
runs for a fixed spec and seed.

Exit codes: 0 success; 2 validation error (the violated clause is printed
to stderr); 3 numerical failure (diagnostics printed to stderr).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from . import core, cumulants, limits, montecarlo, oracle
from .charexp import char_exponent
from .core import GtgsParams, Side
from .errors import (BranchCut, DivergentMoment, DomainError, GridTooNarrow,
                     IncompatibleParams, InvalidParams, NonConvergence,
                     NotEquivalent, PoleError, QuadratureFailure,
                     TabulationFailure, UnsupportedRegime)

__all__ = ["main"]

_VALIDATION = (InvalidParams, DomainError, IncompatibleParams,
               UnsupportedRegime, DivergentMoment, PoleError, NotEquivalent,
               ValueError)
_NUMERICAL = (QuadratureFailure, NonConvergence, TabulationFailure,
              GridTooNarrow, BranchCut)


# ---------------------------------------------------------------------------
# plumbing
# ---------------------------------------------------------------------------

def _parse_grid(spec: str) -> np.ndarray:
    parts = spec.split(":")
    if len(parts) not in (3, 4) or (len(parts) == 4 and parts[3] != "log"):
        raise DomainError(
            f"--grid must look like 'a:b:n' or 'a:b:n:log', got {spec!r}")
    try:
        a, b, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise DomainError(f"--grid endpoints/count unparseable in {spec!r}")
    if n < 1:
        raise DomainError("--grid point count must be >= 1")
    if len(parts) == 4:
        if a <= 0.0 or b <= 0.0:
            raise DomainError("log grids need positive endpoints")
        return np.geomspace(a, b, n)
    return np.linspace(a, b, n)


def _load_params(path: str) -> GtgsParams:
    try:
        with open(path, "r") as fh:
            text = fh.read()
    except OSError as exc:
        raise InvalidParams(f"cannot read --params file: {exc}") from exc
    return core.from_json(text)


def _fmt_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def _json_cell(v):
    if isinstance(v, (np.floating,)):
        return float(v)
    if isinstance(v, (np.integer,)):
        return int(v)
    return v


def _emit(args, header, rows) -> None:
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt_cell(v) for v in row])
        text = buf.getvalue()
    else:
        payload = {"header": list(header),
                   "rows": [[_json_cell(v) for v in row] for row in rows]}
        text = json.dumps(payload) + "\n"
    _write_out(args, text)


def _write_out(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _check_threads() -> None:
    raw = os.environ.get("GTGS_THREADS")
    if raw is None:
        return
    try:
        n = int(raw)
    except ValueError:
        raise DomainError(f"GTGS_THREADS must be an integer, got {raw!r}")
    if n < 1:
        raise DomainError(f"GTGS_THREADS must be >= 1, got {n}")
    # computations are single-threaded; the cap is honored as an upper
    # bound on any internal parallelism


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_eval(args) -> None:
    params = _load_params(args.params)
    zs = (np.array([args.z]) if args.z is not None
          else _parse_grid(args.grid))
    rows = []
    for z in zs:
        val = char_exponent(params, float(z), form=args.form)
        rows.append((float(z), val.real, val.imag))
    _emit(args, ("z", "psi_re", "psi_im"), rows)


def _cmd_density(args) -> None:
    params = _load_params(args.params)
    xs = _parse_grid(args.grid)
    rows = [(float(x), float(core.levy_density(params, float(x))),
             float(core.tempering_function(params, float(x))))
            for x in xs]
    _emit(args, ("x", "levy_density", "tempering"), rows)


def _cumulant_value(params: GtgsParams, n: int) -> float:
    try:
        return cumulants.cumulant(params, n)
    except UnsupportedRegime:
        pass
    active = [params.side(w) for w in (Side.POSITIVE, Side.NEGATIVE)
              if params.side(w).delta > 0.0]
    if all(s.theta == 0.0 for s in active):
        if n == 1:
            report = cumulants.mean_theta0(params)
            if not report.finite:
                raise DivergentMoment(report.criterion)
            return report.value
        if n == 2:
            report = cumulants.variance_theta0(params)
            if not report.finite:
                raise DivergentMoment(report.criterion)
            return report.value
    report = cumulants.moment_finite(params, float(n))
    if not report.finite:
        raise DivergentMoment(
            f"cumulant of order {n} does not exist: {report.criterion}")
    return oracle.cumulant_quadrature(params, n)


def _cmd_cumulants(args) -> None:
    params = _load_params(args.params)
    if args.n < 1:
        raise DomainError("--n must be >= 1")
    _emit(args, ("n", "value"),
          [(args.n, float(_cumulant_value(params, args.n)))])


def _cmd_simulate(args) -> None:
    params = _load_params(args.params)
    config = montecarlo.SimConfig(
        epsilon=args.epsilon, small_jump_mode=args.small_jump_mode,
        tabulation_points=args.tabulation_points)
    times = _parse_grid(args.grid)
    path = montecarlo.sample_path(params, times, config, seed=args.seed)
    if args.format == "csv":
        _write_out(args, path.to_csv())
    else:
        _write_out(args, path.to_json() + "\n")


def _cmd_invert(args) -> None:
    params = _load_params(args.params)
    quad = oracle.QuadratureConfig(abs_tol=args.tol, rel_tol=args.tol)

    def psi(z: float) -> complex:
        return char_exponent(params, z)

    if args.quantity == "pdf":
        parts = args.grid.split(":")
        grid = oracle.GridSpec(n=int(parts[2]), x_min=float(parts[0]),
                               x_max=float(parts[1]))
        table = oracle.fft_pdf(psi, grid, t=args.t)
        rows = [(float(x), float(d)) for x, d in table]
        _emit(args, ("x", "density"), rows)
    else:
        xs = _parse_grid(args.grid)
        rows = [(float(x),
                 float(oracle.gil_pelaez_cdf(psi, float(x), t=args.t,
                                             quad=quad)))
                for x in xs]
        _emit(args, ("x", "cdf"), rows)


def _cmd_limits(args) -> None:
    params = _load_params(args.params)
    if args.deviations:
        try:
            h_seq = [float(tok) for tok in args.deviations.split(",")]
        except ValueError:
            raise DomainError(
                f"--deviations must be comma-separated reals, got "
                f"{args.deviations!r}")
        table = limits.scaling_convergence_check(params, h_seq,
                                                 _parse_grid(args.grid))
        _emit(args, ("h", "deviation"),
              [(float(h), float(d)) for h, d in table])
        return
    law = (limits.short_time_limit(params) if args.law == "short"
           else limits.long_time_limit(params))
    deltas = law.deltas if law.deltas is not None else (None, None)
    _emit(args, ("kind", "index", "delta_plus", "delta_minus", "variance",
                 "drift_note"),
          [(law.kind.value, float(law.index),
            None if deltas[0] is None else float(deltas[0]),
            None if deltas[1] is None else float(deltas[1]),
            None if law.variance is None else float(law.variance),
            law.drift_note)])


def _cmd_abscont(args) -> None:
    params = _load_params(args.params)
    if args.other:
        verdict = limits.mutual_equivalence(params,
                                            _load_params(args.other))
    else:
        verdict = limits.stable_equivalence(params)
    _emit(args, ("equivalent", "reason", "required_drift",
                 "hellinger_estimate"),
          [(bool(verdict.equivalent), verdict.reason,
            None if verdict.required_drift is None
            else float(verdict.required_drift),
            None if verdict.hellinger_estimate is None
            else float(verdict.hellinger_estimate))])


def _figure1_params():
    gtgs = GtgsParams(gamma_plus=1.6, gamma_minus=1.6, alpha_plus=0.5,
                      alpha_minus=0.5, lambda_plus=1.0, lambda_minus=1.0,
                      theta_plus=1.0, theta_minus=1.0, delta_plus=1.0,
                      delta_minus=1.0, mu=0.0)
    gtgs0 = gtgs.replace(theta_plus=0.0, theta_minus=0.0)
    # the classical tempered-stable member has kernel e^{-x}: it is the
    # alpha = 1 member with total rate theta + lambda = 1
    cts = gtgs.replace(alpha_plus=1.0, alpha_minus=1.0, lambda_plus=0.5,
                       lambda_minus=0.5, theta_plus=0.5, theta_minus=0.5)
    return gtgs, gtgs0, cts


def _cmd_figure1(args) -> None:
    gtgs, gtgs0, cts = _figure1_params()
    xs = _parse_grid(args.grid)
    rows = []
    for x in xs:
        x = float(x)
        m_gtgs = float(core.levy_density(gtgs, x))
        q_gtgs = float(core.tempering_function(gtgs, x))
        # untempered stable density: the family value with its tempering
        # factor divided back out
        m_s = m_gtgs / q_gtgs
        rows.append((x,
                     m_s,
                     float(core.levy_density(cts, x)),
                     m_gtgs,
                     float(core.levy_density(gtgs0, x)),
                     1.0,
                     float(core.tempering_function(cts, x)),
                     q_gtgs,
                     float(core.tempering_function(gtgs0, x))))
    _emit(args, ("x", "levy_s", "levy_cts", "levy_gtgs", "levy_gtgs0",
                 "temper_s", "temper_cts", "temper_gtgs", "temper_gtgs0"),
          rows)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_output_flags(sp) -> None:
    sp.add_argument("--out", help="output file (default: stdout)")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gtgs",
        description="tempered geometric stable distributions: evaluation, "
                    "simulation, inversion, limits, absolute continuity")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("eval", help="characteristic exponent on a z grid")
    sp.add_argument("--params", required=True)
    sp.add_argument("--grid", default="-10:10:21")
    sp.add_argument("--z", type=float, default=None,
                    help="single evaluation point (overrides --grid)")
    sp.add_argument("--form", choices=("auto", "mean_compensated",
                                       "uncompensated"), default="auto")
    _add_output_flags(sp)
    sp.set_defaults(func=_cmd_eval)

    sp = sub.add_parser("density", help="Levy density and tempering factor")
    sp.add_argument("--params", required=True)
    sp.add_argument("--grid", default="0.01:10:50")
    _add_output_flags(sp)
    sp.set_defaults(func=_cmd_density)

    sp = sub.add_parser("cumulants", help="cumulant of a given order")
    sp.add_argument("--params", required=True)
    sp.add_argument("--n", type=int, required=True)
    _add_output_flags(sp)
    sp.set_defaults(func=_cmd_cumulants)

    sp = sub.add_parser("simulate", help="sample a path at grid times")
    sp.add_argument("--params", required=True)
    sp.add_argument("--grid", default="0:1:11", help="observation times")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--epsilon", type=float, default=0.01)
    sp.add_argument("--small-jump-mode", dest="small_jump_mode",
                    choices=("drift_only", "gaussian_refinement"),
                    default="gaussian_refinement")
    sp.add_argument("--tabulation-points", dest="tabulation_points",
                    type=int, default=4096)
    _add_output_flags(sp)
    sp.set_defaults(func=_cmd_simulate)

    sp = sub.add_parser("invert", help="Fourier inversion to PDF or CDF")
    sp.add_argument("--params", required=True)
    sp.add_argument("--quantity", choices=("pdf", "cdf"), default="pdf")
    sp.add_argument("--grid", default="-8:8:256")
    sp.add_argument("--t", type=float, default=1.0)
    sp.add_argument("--tol", type=float, default=1e-9)
    _add_output_flags(sp)
    sp.set_defaults(func=_cmd_invert)

    sp = sub.add_parser("limits", help="scaling-limit law or deviation "
                                       "table")
    sp.add_argument("--params", required=True)
    sp.add_argument("--law", choices=("short", "long"), default="short")
    sp.add_argument("--deviations",
                    help="comma-separated h values: emit (h, deviation) "
                         "rows instead of the limit descriptor")
    sp.add_argument("--grid", default="-2:2:9",
                    help="z grid for --deviations")
    _add_output_flags(sp)
    sp.set_defaults(func=_cmd_limits)

    sp = sub.add_parser("abscont", help="absolute-continuity verdict")
    sp.add_argument("--params", required=True)
    sp.add_argument("--other",
                    help="second parameter file: test the two family laws "
                         "against each other instead of the stable "
                         "reference")
    _add_output_flags(sp)
    sp.set_defaults(func=_cmd_abscont)

    sp = sub.add_parser("figure1", help="density/tempering comparison "
                                        "curves on a log grid")
    sp.add_argument("--grid", default="0.001:100:121:log")
    _add_output_flags(sp)
    sp.set_defaults(func=_cmd_figure1)

    return parser


def _merge_value_flags(argv):
    """Join '--grid -2:2:5' into '--grid=-2:2:5' so values that begin
    with a minus sign are not mistaken for option names."""
    merged = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--grid", "--deviations") and i + 1 < len(argv):
            merged.append(tok + "=" + argv[i + 1])
            i += 2
        else:
            merged.append(tok)
            i += 1
    return merged


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = _build_parser().parse_args(_merge_value_flags(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        _check_threads()
        args.func(args)
        return 0
    except _VALIDATION as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _NUMERICAL as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
