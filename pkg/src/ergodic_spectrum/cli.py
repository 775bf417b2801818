"""Command line: ``ergodic-spectrum {spectrum,solve,verify,plot}``.

Exit codes: 0 success, 1 a verification report failed, 2 usage or parameter error.
"""
import argparse
import io
import json
import math
import sys

from . import kernels
from .errors import SpectrumError
from .ifs import attractor_dimension, params_from_ratios, validate_params
from .measure import MeasureParams, SamplerSeed, sample_prefix
from .oracle import (
    VerificationReport,
    enumerate_check,
    golden_membership_check,
    grid_maximize_D,
    grid_step,
    mc_frequency_check,
    mc_local_dimension,
    telescope_residual,
    telescope_summands,
)
from .plot import spectrum_svg
from .solver import SolverConfig, bernoulli_point, exact_formulas, solve_alpha, solve_golden_p, spectrum_sweep

CSV_COLUMNS = ("alpha", "p", "q", "dimension", "residual_f", "formula_spread")
LN2 = math.log(2.0)


class UsageError(Exception):
    pass


def fmt(x):
    """12 significant digits, locale independent."""
    if x is None:
        return ""
    return format(float(x), ".12g")


def json_number(x):
    if x is None or not math.isfinite(x):
        return None
    return float(fmt(x))


def parse_alphas(text):
    """``a:b:step`` (inclusive of b when step divides the span) or a comma list."""
    text = text.strip()
    try:
        if ":" in text:
            a, b, step = (float(s) for s in text.split(":"))
            if step <= 0 or b < a:
                raise UsageError(f"bad range {text!r}")
            k = math.floor((b - a) / step + 1e-9)
            values = [a + i * step for i in range(k + 1)]
            if abs(a + (k + 1) * step - b) <= 1e-12:
                values.append(b)
            elif abs(values[-1] - b) <= 1e-12:
                values[-1] = b
            values = [float(fmt(v)) for v in values]
        else:
            values = [float(s) for s in text.split(",") if s.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot parse alpha grid {text!r}: {exc}") from None
    if not values:
        raise UsageError("empty alpha grid")
    if any(not 0.0 <= v <= 1.0 for v in values):
        raise UsageError("alpha values must lie in [0, 1]")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise UsageError("alpha grid must be strictly increasing")
    return values


def resolve_params(args):
    if args.lambda0 is not None and args.ratio0 is not None:
        raise UsageError("--lambda0 and --ratio0 are mutually exclusive")
    if args.lambda1 is not None and args.ratio1 is not None:
        raise UsageError("--lambda1 and --ratio1 are mutually exclusive")
    l0 = args.lambda0 if args.lambda0 is not None else (-math.log(args.ratio0) if args.ratio0 is not None else LN2)
    l1 = args.lambda1 if args.lambda1 is not None else (-math.log(args.ratio1) if args.ratio1 is not None else LN2)
    if args.ratio0 is not None or args.ratio1 is not None:
        r0 = args.ratio0 if args.ratio0 is not None else math.exp(-l0)
        r1 = args.ratio1 if args.ratio1 is not None else math.exp(-l1)
        return params_from_ratios(r0, r1)
    return validate_params(l0, l1)


def solver_config(args):
    return SolverConfig(tolerance=args.tolerance)


# ------------------------------------------------------------------ renderers

def render_csv(points):
    with_error = any(pt.error for pt in points)
    cols = CSV_COLUMNS + (("error",) if with_error else ())
    buf = io.StringIO()
    buf.write(",".join(cols) + "\n")
    for pt in points:
        row = [fmt(getattr(pt, c)) for c in CSV_COLUMNS]
        if with_error:
            row.append((pt.error or "").replace(",", ";"))
        buf.write(",".join(row) + "\n")
    return buf.getvalue()


def point_record(pt):
    rec = {c: json_number(getattr(pt, c)) for c in CSV_COLUMNS}
    if pt.error:
        rec["error"] = pt.error
    return rec


def render_json(obj):
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def write_output(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path!r}: {exc.strerror or exc}") from None


# ------------------------------------------------------------------ commands

def cmd_spectrum(args):
    params = resolve_params(args)
    alphas = parse_alphas(args.alphas)
    points = spectrum_sweep(params, alphas, solver_config(args))
    if args.format == "svg":
        return _emit_svg(params, points, args)
    if args.format == "json":
        text = render_json([point_record(pt) for pt in points])
    else:
        text = render_csv(points)
    write_output(text, args.out)
    return 0


def cmd_solve(args):
    params = resolve_params(args)
    if not 0.0 <= args.alpha <= 1.0:
        raise UsageError("--alpha must lie in [0, 1]")
    if args.format == "svg":
        raise UsageError("solve writes csv or json")
    pt = spectrum_sweep(params, [args.alpha], solver_config(args))[0]
    extra = exact_formulas(params, pt)
    if args.format == "csv":
        cols = CSV_COLUMNS + tuple(extra)
        vals = [fmt(getattr(pt, c)) for c in CSV_COLUMNS] + [fmt(v) for v in extra.values()]
        text = ",".join(cols) + "\n" + ",".join(vals) + "\n"
    else:
        rec = point_record(pt)
        rec.update({k: json_number(v) for k, v in extra.items()})
        text = render_json(rec)
    write_output(text, args.out)
    return 0 if pt.error is None else 1


def _power_of_two(n):
    return n > 0 and n & (n - 1) == 0


def run_battery(params, alpha, seed, samples, depth, cfg):
    """All oracle checks at one parameter point. Returns (reports, skipped)."""
    reports, skipped = [], []
    point = solve_alpha(params, alpha, cfg)
    mp = MeasureParams(point.p, point.q)

    def job_seed(i):
        return kernels.stream_key(seed, i)

    def attempt(name, fn):
        try:
            out = fn()
        except SpectrumError as exc:
            skipped.append({"name": name, "reason": f"{type(exc).__name__}: {exc}"})
            return
        reports.extend(out if isinstance(out, list) else [out])

    attempt("mc_frequency", lambda: mc_frequency_check(mp, depth, samples, job_seed(1)))
    attempt("mc_local_dimension", lambda: mc_local_dimension(params, mp, depth, samples, job_seed(2)))
    attempt("enumerate", lambda: enumerate_check(mp, 15))

    def grid():
        gp, _, gd = grid_maximize_D(params, alpha, 10 ** 5)
        step = grid_step(alpha, 10 ** 5)
        return [
            VerificationReport("grid_argmax_p", point.p, gp, 2.0 * step, n_used=10 ** 5),
            VerificationReport("grid_max_D", point.dimension, gd, 1e-7, n_used=10 ** 5),
        ]

    attempt("grid", grid)

    def golden():
        p0 = solve_golden_p(params, cfg)
        return golden_membership_check(MeasureParams(p0, 0.0), depth, samples, job_seed(3))

    attempt("golden_membership", golden)

    def telescope():
        w = sample_prefix(mp, depth, SamplerSeed(job_seed(4), 0))
        direct = telescope_residual(params, point, w, depth)
        split = telescope_summands(point, w, depth)
        tol = 0.01 * max(1.0, math.sqrt((1 << 16) / depth))
        return [
            VerificationReport("telescope_identity", split, direct, 1e-10, n_used=depth, seeds_used=1),
            VerificationReport("telescope_residual", 0.0, direct, tol, n_used=depth, seeds_used=1),
        ]

    attempt("telescope", telescope)
    return point, reports, skipped


def cmd_verify(args):
    params = resolve_params(args)
    if not _power_of_two(args.depth):
        raise UsageError(f"--depth must be a power of two, got {args.depth}")
    if not 0.0 <= args.alpha <= 1.0:
        raise UsageError("--alpha must lie in [0, 1]")
    point, reports, skipped = run_battery(params, args.alpha, args.seed, args.samples, args.depth, solver_config(args))
    ok = all(r.passed for r in reports)
    doc = {
        "lambda0": params.lambda0,
        "lambda1": params.lambda1,
        "alpha": args.alpha,
        "seed": args.seed,
        "point": point_record(point),
        "passed": ok,
        "reports": [r.as_dict() for r in reports],
        "skipped": skipped,
    }
    write_output(render_json(doc), args.out)
    return 0 if ok else 1


def _emit_svg(params, points, args):
    if len(points) < 2:
        raise UsageError("plot needs at least two alpha values")
    alpha_b, _ = bernoulli_point(params)
    text = spectrum_svg(points, attractor_dimension(params), alpha_b, params)
    write_output(text, args.out)
    return 0


def cmd_plot(args):
    params = resolve_params(args)
    alphas = parse_alphas(args.alphas)
    points = spectrum_sweep(params, alphas, solver_config(args))
    return _emit_svg(params, points, args)


# ------------------------------------------------------------------ parser

def _uint64(text):
    v = int(text, 0)
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("must be an unsigned 64-bit integer")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("parameters")
    g.add_argument("--lambda0", type=float, help="exponent of f0 (default ln 2)")
    g.add_argument("--lambda1", type=float, help="exponent of f1 (default ln 2)")
    g.add_argument("--ratio0", type=float, help="contraction ratio of f0, alternative to --lambda0")
    g.add_argument("--ratio1", type=float, help="contraction ratio of f1, alternative to --lambda1")
    g.add_argument("--alphas", default="0:1:0.05", help="grid as a:b:step or comma list")
    g.add_argument("--alpha", type=float, default=0.5)
    g.add_argument("--seed", type=_uint64, default=42)
    g.add_argument("--samples", type=int, default=64, help="Monte Carlo paths")
    g.add_argument("--depth", type=int, default=1 << 16, help="word length for Monte Carlo (power of two)")
    g.add_argument("--format", choices=("csv", "json", "svg"), default=None)
    g.add_argument("--out", default="-", help="output file, '-' for stdout")
    g.add_argument("--tolerance", type=float, default=1e-12)

    parser = argparse.ArgumentParser(prog="ergodic-spectrum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, default_fmt, help_ in (
        ("spectrum", cmd_spectrum, "csv", "dimension for every alpha of a grid"),
        ("solve", cmd_solve, "json", "one alpha with all closed-form values"),
        ("verify", cmd_verify, "json", "run the oracle battery"),
        ("plot", cmd_plot, "svg", "SVG plot of the spectrum"),
    ):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn, default_format=default_fmt)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    try:
        return args.func(args)
    except (UsageError, SpectrumError) as exc:
        print(f"ergodic-spectrum: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
