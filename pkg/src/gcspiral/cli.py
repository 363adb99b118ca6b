"""Command-line front end: synth, lcg, gradient, classify, lddc, figures.

Exit codes: 0 on success, 2 for input or domain errors, 3 for quadrature
failures. Every command prints a one-line JSON summary to standard output;
data files land in --out (or $GCSPIRAL_OUT, or the working directory).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys
from typing import IO, Optional, Sequence, Union

import numpy as np

from .errors import (
    DegenerateDataError,
    DomainError,
    MismatchedInputsError,
    QuadratureError,
    SingularPointError,
    SingularProfileError,
)
from .lcg import (
    classify_aesthetic,
    gcs_rho_handles,
    gradient_from_samples,
    gradient_gcs,
    gradient_line,
    gradient_to_csv,
    lcg_gcs_points,
    lcg_gradient_numeric,
    lcg_line_to_json_dict,
    lcg_numeric,
    lcg_points_to_csv,
    line_residual,
)
from .lddc import comparison_to_csv, lddc_histogram, lddc_to_csv, lddc_to_svg, lddc_vs_lcg
from .profiles import (
    ConstantProfile,
    CurvatureProfile,
    GcsProfile,
    LinearProfile,
    QuadraticProfile,
    classify_degenerate,
    profile_from_json,
    to_gcs,
)
from .svg import polyline_svg
from .synthesis import (
    Pose,
    QuadratureConfig,
    curve_to_csv,
    curve_to_svg,
    endpoint,
    synthesize,
)

__all__ = ["main", "entrypoint", "build_parser", "R_SWEEP"]

OUT_ENV_VAR = "GCSPIRAL_OUT"
VALID_FORMATS = ("csv", "json", "svg")

# Shape-factor sweep used by the `figures` command, descending as plotted.
R_SWEEP = (100.0, 5.0, 2.0, 1.0, 0.0, -0.5, -0.9, -0.99)


# -- argument plumbing ---------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gcspiral",
        description=(
            "Synthesize planar curves from curvature profiles and interrogate "
            "them through logarithmic curvature graphs and histograms."
        ),
    )
    parser.add_argument(
        "--seed-check",
        action="store_true",
        help="run the built-in numerical self-checks and exit nonzero on failure",
    )
    sub = parser.add_subparsers(dest="command")

    def add_profile_options(sp):
        sp.add_argument("--gcs", help="rational-linear profile as kappa0,kappa1,arc_length,r")
        sp.add_argument("--constant", type=float, help="constant curvature value (needs --length)")
        sp.add_argument("--linear", help="linear profile as kappa0,kappa1 (needs --length)")
        sp.add_argument("--quadratic", help="quadratic profile as a,kappa0,kappa1 (needs --length)")
        sp.add_argument("--length", type=float, help="arc length for --constant/--linear/--quadratic")
        sp.add_argument("--profile", help="profile JSON document given inline or as a file path")

    def add_output_options(sp):
        sp.add_argument("--out", help=f"output directory (default ${OUT_ENV_VAR} or '.')")
        sp.add_argument("--prefix", help="basename for output files")
        sp.add_argument(
            "--formats",
            default="csv,svg",
            help="comma-separated subset of csv,json,svg (default csv,svg)",
        )

    def add_quadrature_options(sp):
        sp.add_argument("--abs-tol", type=float, default=1e-10, help="integration tolerance")
        sp.add_argument("--max-subdivisions", type=int, default=40, help="adaptive recursion cap")
        sp.add_argument("--samples", type=int, default=256, help="output samples per curve")

    p_synth = sub.add_parser("synth", help="synthesize a curve from a curvature profile")
    add_profile_options(p_synth)
    add_output_options(p_synth)
    add_quadrature_options(p_synth)
    p_synth.add_argument("--pose", default="0,0,0", help="start state as x0,y0,theta0")

    p_lcg = sub.add_parser("lcg", help="logarithmic curvature graph of a profile")
    add_profile_options(p_lcg)
    add_output_options(p_lcg)
    add_quadrature_options(p_lcg)

    p_grad = sub.add_parser("gradient", help="LCG gradient trace and fitted line")
    add_profile_options(p_grad)
    add_output_options(p_grad)
    add_quadrature_options(p_grad)
    p_grad.add_argument(
        "--sampled",
        action="store_true",
        help="estimate from a synthesized sample grid instead of closed form",
    )

    p_cls = sub.add_parser("classify", help="degenerate subfamily and aesthetic class")
    add_profile_options(p_cls)
    add_output_options(p_cls)

    p_lddc = sub.add_parser("lddc", help="radius-of-curvature histogram of a synthesized curve")
    add_profile_options(p_lddc)
    add_output_options(p_lddc)
    add_quadrature_options(p_lddc)
    p_lddc.add_argument("--bins", type=int, default=16, help="number of histogram bins")
    p_lddc.add_argument(
        "--compare",
        action="store_true",
        help="also compare against the analytic radius-inversion prediction",
    )

    p_fig = sub.add_parser(
        "figures",
        help="emit the standard gallery: demo curve plus profile/curve/LCG/gradient sweeps over r",
    )
    add_output_options(p_fig)
    add_quadrature_options(p_fig)
    return parser


def _parse_floats(text: str, count: int, what: str) -> tuple[float, ...]:
    parts = text.split(",")
    if len(parts) != count:
        raise DomainError(f"{what} expects {count} comma-separated numbers, got {text!r}")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise DomainError(f"{what} holds a non-numeric field: {text!r}") from None


def _require_length(args, flag: str) -> float:
    if args.length is None:
        raise DomainError(f"--length is required with {flag}")
    return args.length


def profile_from_args(args) -> CurvatureProfile:
    given = [
        flag
        for flag, value in (
            ("--gcs", args.gcs),
            ("--constant", args.constant),
            ("--linear", args.linear),
            ("--quadratic", args.quadratic),
            ("--profile", args.profile),
        )
        if value is not None
    ]
    if len(given) != 1:
        raise DomainError(
            "exactly one of --gcs/--constant/--linear/--quadratic/--profile must be given"
            + (f"; got {', '.join(given)}" if given else "")
        )
    if args.gcs is not None:
        k0, k1, s_total, r = _parse_floats(args.gcs, 4, "--gcs")
        return GcsProfile(k0, k1, s_total, r)
    if args.constant is not None:
        return ConstantProfile(args.constant, _require_length(args, "--constant"))
    if args.linear is not None:
        k0, k1 = _parse_floats(args.linear, 2, "--linear")
        return LinearProfile(k0, k1, _require_length(args, "--linear"))
    if args.quadratic is not None:
        a, k0, k1 = _parse_floats(args.quadratic, 3, "--quadratic")
        return QuadraticProfile(a, k0, k1, _require_length(args, "--quadratic"))
    text = args.profile.strip()
    if text.startswith("{"):
        return profile_from_json(text)
    try:
        with open(args.profile, "r", encoding="utf-8") as fh:
            return profile_from_json(fh.read())
    except OSError as exc:
        raise DomainError(f"cannot read profile file {args.profile!r}: {exc}") from None


def _pose_from_args(args) -> Pose:
    x0, y0, theta0 = _parse_floats(args.pose, 3, "--pose")
    return Pose(x0, y0, theta0)


def _config_from_args(args) -> QuadratureConfig:
    return QuadratureConfig(args.abs_tol, args.max_subdivisions, args.samples)


def _formats_from_args(args) -> set[str]:
    formats = {f.strip() for f in args.formats.split(",") if f.strip()}
    bad = formats - set(VALID_FORMATS)
    if bad or not formats:
        raise DomainError(
            f"--formats must be a nonempty subset of {','.join(VALID_FORMATS)}, got {args.formats!r}"
        )
    return formats


def _out_dir(args) -> str:
    out = args.out or os.environ.get(OUT_ENV_VAR) or "."
    os.makedirs(out, exist_ok=True)
    return out


def _emit(summary: dict) -> None:
    print(json.dumps(summary, sort_keys=True))


def _write_json(path: str, payload: dict) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


# -- profile-trace CSV (s,kappa) -----------------------------------------

_TRACE_HEADER = "s,kappa"


def profile_trace_to_csv(
    s_values: Sequence[float], kappa_values: Sequence[float], target: Union[str, IO[str]]
) -> None:
    rows = [_TRACE_HEADER]
    for s_val, k_val in zip(s_values, kappa_values):
        rows.append(f"{s_val:.17g},{k_val:.17g}")
    text = "\n".join(rows) + "\n"
    if hasattr(target, "write"):
        target.write(text)
    else:
        with open(target, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def profile_trace_from_csv(source: Union[str, IO[str]]) -> tuple[np.ndarray, np.ndarray]:
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != _TRACE_HEADER:
        raise DomainError(f"profile trace CSV must start with header '{_TRACE_HEADER}'")
    s_vals: list[float] = []
    k_vals: list[float] = []
    for ln in lines[1:]:
        parts = ln.split(",")
        if len(parts) != 2:
            raise DomainError(f"profile trace row has {len(parts)} fields, expected 2: {ln!r}")
        try:
            s_vals.append(float(parts[0]))
            k_vals.append(float(parts[1]))
        except ValueError:
            raise DomainError(f"profile trace row is not numeric: {ln!r}") from None
    return np.asarray(s_vals), np.asarray(k_vals)


# -- commands ------------------------------------------------------------

def cmd_synth(args) -> int:
    profile = profile_from_args(args)
    pose = _pose_from_args(args)
    config = _config_from_args(args)
    formats = _formats_from_args(args)
    out = _out_dir(args)
    base = args.prefix or "curve"

    curve = synthesize(profile, pose, config)
    files: list[str] = []
    if "csv" in formats:
        path = os.path.join(out, f"{base}.csv")
        curve_to_csv(curve, path)
        files.append(path)
    if "svg" in formats:
        path = os.path.join(out, f"{base}.svg")
        curve_to_svg(curve, path, title=base)
        files.append(path)
    summary = {
        "endpoint": {
            "x": float(curve.x[-1]),
            "y": float(curve.y[-1]),
            "theta": float(curve.theta[-1]),
        },
        "arc_length": curve.total_length,
        "samples": len(curve),
        "files": sorted(files),
    }
    if "json" in formats:
        path = os.path.join(out, f"{base}.json")
        _write_json(path, summary)
        summary["files"] = sorted(files + [path])
    _emit(summary)
    return 0


def _generic_rho_handles(profile: CurvatureProfile):
    def rho(t: float) -> float:
        return 1.0 / profile.kappa(t)

    def rho_prime(t: float) -> float:
        k = profile.kappa(t)
        return -profile.kappa_prime(t) / (k * k)

    return rho, rho_prime, (lambda t: 1.0)


def cmd_lcg(args) -> int:
    profile = profile_from_args(args)
    config = _config_from_args(args)
    formats = _formats_from_args(args)
    out = _out_dir(args)
    base = args.prefix or "lcg"

    grid = np.linspace(0.0, profile.arc_length, config.samples_per_curve)
    gcs = to_gcs(profile)
    if gcs is not None:
        points, skipped = lcg_gcs_points(gcs, grid)
    else:
        rho, rho_prime, s_prime = _generic_rho_handles(profile)
        points, skipped = lcg_numeric(rho, rho_prime, s_prime, grid)
    if not points:
        raise DegenerateDataError("the LCG is undefined at every grid value for this profile")

    files: list[str] = []
    if "csv" in formats:
        path = os.path.join(out, f"{base}.csv")
        lcg_points_to_csv(points, path)
        files.append(path)
    if "svg" in formats:
        path = os.path.join(out, f"{base}.svg")
        coords = [(p.log_rho, p.log_freq) for p in points]
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(polyline_svg([coords], title=base))
        files.append(path)
    summary = {
        "points": len(points),
        "skipped": [{"t": sp.t, "reason": sp.reason} for sp in skipped],
        "files": sorted(files),
    }
    if "json" in formats:
        path = os.path.join(out, f"{base}.json")
        _write_json(path, summary)
        summary["files"] = sorted(files + [path])
    _emit(summary)
    return 0


def cmd_gradient(args) -> int:
    profile = profile_from_args(args)
    config = _config_from_args(args)
    formats = _formats_from_args(args)
    out = _out_dir(args)
    base = args.prefix or "gradient"

    if args.sampled:
        curve = synthesize(profile, Pose(), config)
        trace, line = gradient_from_samples(curve)
        aesthetic = classify_aesthetic(line, line.residual, tol_fit=1e-2)
    else:
        gcs = to_gcs(profile)
        if gcs is None:
            raise DomainError(
                "closed-form gradients need rational-linear curvature; "
                "use --sampled for other profiles"
            )
        line = gradient_line(gcs)
        residual = line_residual(gcs, line, num=config.samples_per_curve)
        line = dataclasses.replace(line, residual=residual)
        grid = np.linspace(0.0, gcs.arc_length, config.samples_per_curve)
        trace = [(float(t), gradient_gcs(gcs, float(t))) for t in grid]
        aesthetic = classify_aesthetic(line, residual, tol_fit=1e-6)

    files: list[str] = []
    if "csv" in formats:
        path = os.path.join(out, f"{base}.csv")
        gradient_to_csv(trace, path)
        files.append(path)
    if "svg" in formats:
        path = os.path.join(out, f"{base}.svg")
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(polyline_svg([trace], title=base))
        files.append(path)
    line_doc = lcg_line_to_json_dict(line, aesthetic)
    if "json" in formats:
        path = os.path.join(out, f"{base}.json")
        _write_json(path, line_doc)
        files.append(path)
    _emit({"line": line_doc, "files": sorted(files)})
    return 0


def cmd_classify(args) -> int:
    profile = profile_from_args(args)
    formats = _formats_from_args(args)
    gcs = to_gcs(profile)
    if gcs is None:
        raise DomainError(
            "classification is defined for rational-linear curvature profiles; "
            "constant/linear profiles convert automatically, general quadratics do not"
        )
    degenerate = classify_degenerate(gcs)
    try:
        line = gradient_line(gcs)
        residual = line_residual(gcs, line)
        line = dataclasses.replace(line, residual=residual)
        aesthetic = classify_aesthetic(line, residual)
        verdict = {
            "degenerate": degenerate.value,
            "lcg_line": {"A": line.slope_a, "B": line.intercept_b},
            "class": aesthetic.value,
        }
    except SingularProfileError as exc:
        verdict = {
            "degenerate": degenerate.value,
            "lcg_line": None,
            "class": "lcg_undefined",
            "reason": str(exc),
        }
    if "json" in formats:
        out = _out_dir(args)
        base = args.prefix or "classify"
        path = os.path.join(out, f"{base}.json")
        _write_json(path, verdict)
        verdict = dict(verdict, files=[path])
    _emit(verdict)
    return 0


def cmd_lddc(args) -> int:
    profile = profile_from_args(args)
    config = _config_from_args(args)
    formats = _formats_from_args(args)
    out = _out_dir(args)
    base = args.prefix or "lddc"

    curve = synthesize(profile, Pose(), config)
    histogram = lddc_histogram(curve, args.bins)
    files: list[str] = []
    if "csv" in formats:
        path = os.path.join(out, f"{base}.csv")
        lddc_to_csv(histogram, path)
        files.append(path)
    if "svg" in formats:
        path = os.path.join(out, f"{base}.svg")
        lddc_to_svg(histogram, path)
        files.append(path)
    summary = {
        "bins": histogram.num_bins,
        "total_length": histogram.total_length,
        "excluded_length": histogram.excluded_length,
    }
    if args.compare:
        gcs = to_gcs(profile)
        if gcs is None:
            raise DomainError("--compare needs a rational-linear profile")
        comparison = lddc_vs_lcg(histogram, gradient_line(gcs), gcs)
        if "csv" in formats:
            path = os.path.join(out, f"{base}_compare.csv")
            comparison_to_csv(comparison, path)
            files.append(path)
        summary["max_abs_deviation"] = comparison.max_abs_deviation
    summary["files"] = sorted(files)
    if "json" in formats:
        path = os.path.join(out, f"{base}.json")
        _write_json(path, summary)
        summary["files"] = sorted(files + [path])
    _emit(summary)
    return 0


def cmd_figures(args) -> int:
    config = _config_from_args(args)
    formats = _formats_from_args(args)
    out = _out_dir(args)
    files: list[str] = []
    svg_wanted = "svg" in formats

    def tag(r: float) -> str:
        return f"{r:g}"

    demo = LinearProfile(0.0, 2.0, 1.0)
    demo_curve = synthesize(demo, Pose(), config)
    path = os.path.join(out, "fig1_curve.csv")
    curve_to_csv(demo_curve, path)
    files.append(path)
    if svg_wanted:
        path = os.path.join(out, "fig1.svg")
        curve_to_svg(demo_curve, path, title="linear curvature demo curve")
        files.append(path)

    profile_lines = []
    curve_lines = []
    lcg_lines = []
    gradient_lines = []
    labels = [f"r={tag(r)}" for r in R_SWEEP]
    for r in R_SWEEP:
        profile = GcsProfile(0.0, 2.0, math.pi, r)
        grid = np.linspace(0.0, profile.arc_length, config.samples_per_curve)

        kappas = [profile.kappa(float(t)) for t in grid]
        path = os.path.join(out, f"fig2_profile_r{tag(r)}.csv")
        profile_trace_to_csv(grid.tolist(), kappas, path)
        files.append(path)
        profile_lines.append(list(zip(grid.tolist(), kappas)))

        try:
            curve = synthesize(profile, Pose(), config)
        except QuadratureError as exc:
            raise QuadratureError(f"curve synthesis failed at r={tag(r)}: {exc}") from None
        path = os.path.join(out, f"fig3_curve_r{tag(r)}.csv")
        curve_to_csv(curve, path)
        files.append(path)
        curve_lines.append(list(zip(curve.x.tolist(), curve.y.tolist())))

        points, _skipped = lcg_gcs_points(profile, grid)
        path = os.path.join(out, f"fig4_lcg_r{tag(r)}.csv")
        lcg_points_to_csv(points, path)
        files.append(path)
        lcg_lines.append([(p.log_rho, p.log_freq) for p in points])

        trace = [(float(t), gradient_gcs(profile, float(t))) for t in grid]
        path = os.path.join(out, f"fig5_gradient_r{tag(r)}.csv")
        gradient_to_csv(trace, path)
        files.append(path)
        gradient_lines.append(trace)

    if svg_wanted:
        for name, lines, title in (
            ("fig2.svg", profile_lines, "curvature profiles over the r sweep"),
            ("fig3.svg", curve_lines, "curve traces over the r sweep"),
            ("fig4.svg", lcg_lines, "logarithmic curvature graphs over the r sweep"),
            ("fig5.svg", gradient_lines, "LCG gradients over the r sweep"),
        ):
            path = os.path.join(out, name)
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(polyline_svg(lines, labels=labels, title=title))
            files.append(path)

    _emit(
        {
            "csv_count": sum(1 for f in files if f.endswith(".csv")),
            "files": sorted(files),
            "r_values": list(R_SWEEP),
        }
    )
    return 0


# -- built-in self-checks ------------------------------------------------

def run_seed_check() -> int:
    """Quick oracle suite: circle endpoint, gradient-line identity, FD gradient."""
    checks: dict[str, bool] = {}

    c, s_total = 1.3, 2.0
    circle = ConstantProfile(c, s_total)
    end = endpoint(circle)
    expect = (math.sin(c * s_total) / c, (1.0 - math.cos(c * s_total)) / c)
    checks["circle_endpoint"] = (
        abs(end.x - expect[0]) <= 1e-9 and abs(end.y - expect[1]) <= 1e-9
    )

    ok = True
    for k0, k1, s_len, r in ((0.0, 2.0, math.pi, 1.0), (0.5, -2.0, 3.0, 4.0), (2.0, 0.3, 1.5, -0.7)):
        profile = GcsProfile(k0, k1, s_len, r)
        line = gradient_line(profile)
        for t in np.linspace(0.0, s_len, 17).tolist():
            value = gradient_gcs(profile, t)
            if abs(value - line(t)) > 1e-10 * max(1.0, abs(value)):
                ok = False
    checks["gradient_line_identity"] = ok

    profile = GcsProfile(0.1, 2.0, math.pi, 2.0)
    handles = gcs_rho_handles(profile)
    ok = True
    h = 1e-5 * profile.arc_length
    for t in np.linspace(0.2, profile.arc_length - 0.2, 9).tolist():
        lo = lcg_gcs_points(profile, [t - h])[0][0]
        hi = lcg_gcs_points(profile, [t + h])[0][0]
        fd = (hi.log_freq - lo.log_freq) / (hi.log_rho - lo.log_rho)
        exact = lcg_gradient_numeric(
            handles.rho, handles.rho_prime, handles.rho_double_prime,
            handles.s_prime, handles.s_double_prime, t,
        )
        if abs(fd - exact) > 1e-6:
            ok = False
    checks["finite_difference_gradient"] = ok

    passed = all(checks.values())
    print(json.dumps({"checks": checks, "ok": passed}, sort_keys=True))
    return 0 if passed else 1


# -- entry ---------------------------------------------------------------

_DISPATCH = {
    "synth": cmd_synth,
    "lcg": cmd_lcg,
    "gradient": cmd_gradient,
    "classify": cmd_classify,
    "lddc": cmd_lddc,
    "figures": cmd_figures,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.seed_check:
            return run_seed_check()
        if args.command is None:
            parser.print_usage(sys.stderr)
            print("error: a command is required (or --seed-check)", file=sys.stderr)
            return 2
        return _DISPATCH[args.command](args)
    except (
        DomainError,
        SingularProfileError,
        SingularPointError,
        DegenerateDataError,
        MismatchedInputsError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QuadratureError as exc:
        print(f"quadrature failure: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    raise SystemExit(main())
