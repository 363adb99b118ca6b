"""Logarithmic curvature graph (LCG), its gradient, and aesthetic classification.

For a parametric curve with radius of curvature rho(t) and arc length s(t),
the LCG is the point set (log|rho|, log|rho*s'/rho'|) and its gradient is

    gradient(t) = 1 + (rho/rho'^2) * (rho'*s''/s' - rho'').

For the rational-linear curvature family the gradient is an exact linear
function of arc length, gradient(t) = A*t + B; a curve whose gradient is
constant (A = 0) meets the stricter log-aesthetic criterion, and a linear
but non-constant gradient is the signature of the wider rational-linear
class. Natural logarithms are used throughout this module.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from typing import Callable, IO, Optional, Sequence, Union

import numpy as np

from .errors import (
    DegenerateDataError,
    DomainError,
    SingularPointError,
    SingularProfileError,
)
from .profiles import GcsProfile, coefficient_scale
from .synthesis import PlanarCurve

__all__ = [
    "LcgPoint",
    "SkippedPoint",
    "LcgLine",
    "AestheticClass",
    "RhoHandles",
    "lcg_numeric",
    "lcg_gradient_numeric",
    "gcs_rho_handles",
    "lcg_gcs_closed_form",
    "lcg_gcs_points",
    "gradient_gcs",
    "gradient_line",
    "line_residual",
    "classify_aesthetic",
    "gradient_from_samples",
    "lcg_points_to_csv",
    "gradient_to_csv",
    "lcg_line_to_json_dict",
    "lcg_line_to_json",
]

# Candidate parameter values whose curvature magnitude falls below
# 1e-12 * scale sit too close to an inflection (rho diverges) and are
# excluded from graph generation; the lddc module mirrors this threshold.
NEAR_INFLECTION_REL_TOL = 1e-12


@dataclass(frozen=True)
class LcgPoint:
    """One LCG sample: parameter value plus both log coordinates."""

    t: float
    log_rho: float
    log_freq: float


@dataclass(frozen=True)
class SkippedPoint:
    """Diagnostic for a grid value where the LCG is undefined."""

    t: float
    reason: str


@dataclass(frozen=True)
class LcgLine:
    """Linear gradient model A*t + B over a parameter domain, with fit residual."""

    slope_a: float
    intercept_b: float
    domain: tuple[float, float]
    residual: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.slope_a) and math.isfinite(self.intercept_b)):
            raise DomainError("LCG line coefficients must be finite")
        lo, hi = self.domain
        if not (math.isfinite(lo) and math.isfinite(hi) and hi > lo):
            raise DomainError(f"LCG line domain must be a nonempty interval, got {self.domain!r}")
        object.__setattr__(self, "domain", (float(lo), float(hi)))

    def __call__(self, t: float) -> float:
        return self.slope_a * t + self.intercept_b


class AestheticClass(enum.Enum):
    """Verdict of the linear-gradient criterion."""

    LOG_AESTHETIC = "log_aesthetic"
    GCS = "gcs"
    OTHER = "other"


@dataclass(frozen=True)
class RhoHandles:
    """Callable bundle (rho, rho', rho'', s', s'') describing one curve."""

    rho: Callable[[float], float]
    rho_prime: Callable[[float], float]
    rho_double_prime: Callable[[float], float]
    s_prime: Callable[[float], float]
    s_double_prime: Callable[[float], float]


def _call(fn: Callable[[float], float], t: float) -> float:
    """Evaluate a handle, mapping division blowups to signed infinity."""
    try:
        return float(fn(t))
    except ZeroDivisionError:
        return math.inf


def lcg_numeric(
    rho: Callable[[float], float],
    rho_prime: Callable[[float], float],
    s_prime: Callable[[float], float],
    t_grid: Sequence[float],
) -> tuple[list[LcgPoint], list[SkippedPoint]]:
    """Evaluate the LCG on a grid from radius-of-curvature handles.

    Grid values where either log coordinate fails to be finite are skipped
    and reported with a cause rather than raising.
    """
    grid = np.asarray(t_grid, dtype=float)
    if grid.ndim != 1 or len(grid) == 0:
        raise DomainError("t_grid must be a nonempty one-dimensional sequence")
    if not np.all(np.isfinite(grid)):
        raise DomainError("t_grid must be finite")
    if len(grid) > 1 and not np.all(np.diff(grid) > 0.0):
        raise DomainError("t_grid must be strictly increasing")

    points: list[LcgPoint] = []
    skipped: list[SkippedPoint] = []
    for t in grid.tolist():
        r = _call(rho, t)
        rp = _call(rho_prime, t)
        sp = _call(s_prime, t)
        if not math.isfinite(r):
            skipped.append(SkippedPoint(t, "rho is not finite (inflection)"))
            continue
        if r == 0.0:
            skipped.append(SkippedPoint(t, "rho = 0"))
            continue
        if rp == 0.0:
            skipped.append(SkippedPoint(t, "rho' = 0 (curvature extremum)"))
            continue
        if not (math.isfinite(rp) and math.isfinite(sp)):
            skipped.append(SkippedPoint(t, "rho' or s' is not finite"))
            continue
        freq = abs(r * sp / rp)
        if freq == 0.0 or not math.isfinite(freq):
            skipped.append(SkippedPoint(t, "log frequency is not finite"))
            continue
        points.append(LcgPoint(t, math.log(abs(r)), math.log(freq)))
    return points, skipped


def lcg_gradient_numeric(
    rho: Callable[[float], float],
    rho_prime: Callable[[float], float],
    rho_double_prime: Callable[[float], float],
    s_prime: Callable[[float], float],
    s_double_prime: Callable[[float], float],
    t: float,
) -> float:
    """Gradient of the LCG at t from general parametric handles."""
    r = _call(rho, t)
    rp = _call(rho_prime, t)
    rpp = _call(rho_double_prime, t)
    sp = _call(s_prime, t)
    spp = _call(s_double_prime, t)
    if rp == 0.0:
        raise SingularPointError(f"rho'({t!r}) = 0: LCG gradient undefined at curvature extremum")
    if sp == 0.0:
        raise SingularPointError(f"s'({t!r}) = 0: parameterization is singular")
    for name, v in (("rho", r), ("rho'", rp), ("rho''", rpp), ("s'", sp), ("s''", spp)):
        if not math.isfinite(v):
            raise SingularPointError(f"{name}({t!r}) is not finite")
    return 1.0 + (r / (rp * rp)) * (rp * spp / sp - rpp)


def _require_noncircular(profile: GcsProfile, tol: float) -> None:
    if tol < 0.0:
        raise DomainError(f"tol must be >= 0, got {tol!r}")
    if abs(profile.kappa0 - profile.kappa1) <= tol * coefficient_scale(profile):
        raise SingularProfileError(
            "LCG closed forms divide by kappa0 - kappa1; "
            f"profile has kappa0 = {profile.kappa0!r}, kappa1 = {profile.kappa1!r}"
        )


def gcs_rho_handles(profile: GcsProfile, tol: float = NEAR_INFLECTION_REL_TOL) -> RhoHandles:
    """Exact (rho, rho', rho'', s', s'') for an arc-length rational-linear profile.

    With numerator Nu(t) = n1*t + n0 and denominator D(t) = r*t + S:
    rho = D/Nu, rho' = C/Nu^2 and rho'' = -2*n1*C/Nu^3 where the constant
    C = S*(1+r)*(kappa0-kappa1) is nonzero away from the circular case.
    """
    _require_noncircular(profile, tol)
    n1, n0 = profile.n1, profile.n0
    r, S = profile.r, profile.arc_length
    c = S * (1.0 + r) * (profile.kappa0 - profile.kappa1)

    def rho(t: float) -> float:
        return (r * t + S) / (n1 * t + n0)

    def rho_prime(t: float) -> float:
        nu = n1 * t + n0
        return c / (nu * nu)

    def rho_double_prime(t: float) -> float:
        nu = n1 * t + n0
        return -2.0 * n1 * c / (nu * nu * nu)

    return RhoHandles(rho, rho_prime, rho_double_prime, lambda t: 1.0, lambda t: 0.0)


def lcg_gcs_closed_form(
    profile: GcsProfile, t: float, tol: float = NEAR_INFLECTION_REL_TOL
) -> LcgPoint:
    """Exact LCG point of a rational-linear profile at parameter t.

    First coordinate: log|(r*t+S)/(n1*t+n0)|. Second: log of the rho/rho'
    quotient, |(r*t+S)*(n1*t+n0) / (S*(1+r)*(kappa0-kappa1))|.
    """
    _require_noncircular(profile, tol)
    t = float(t)
    S = profile.arc_length
    if not (math.isfinite(t) and -1e-12 * max(1.0, S) <= t <= S * (1.0 + 1e-12) + 1e-12):
        raise DomainError(f"parameter t={t!r} outside [0, {S}]")
    t = min(max(t, 0.0), S)
    nu = profile.n1 * t + profile.n0
    den = profile.r * t + S
    if abs(nu / den) < tol * coefficient_scale(profile):
        raise SingularPointError(
            f"curvature vanishes at t={t!r} (inflection); LCG point undefined"
        )
    c = S * (1.0 + profile.r) * (profile.kappa0 - profile.kappa1)
    return LcgPoint(t, math.log(abs(den / nu)), math.log(abs(den * nu / c)))


def lcg_gcs_points(
    profile: GcsProfile,
    t_grid: Sequence[float],
    tol: float = NEAR_INFLECTION_REL_TOL,
) -> tuple[list[LcgPoint], list[SkippedPoint]]:
    """Closed-form LCG over a grid; near-inflection values become diagnostics."""
    points: list[LcgPoint] = []
    skipped: list[SkippedPoint] = []
    for t in np.asarray(t_grid, dtype=float).tolist():
        try:
            points.append(lcg_gcs_closed_form(profile, t, tol))
        except SingularPointError as exc:
            skipped.append(SkippedPoint(t, str(exc)))
    return points, skipped


def gradient_gcs(profile: GcsProfile, t: float, tol: float = NEAR_INFLECTION_REL_TOL) -> float:
    """Exact LCG gradient of a rational-linear profile at parameter t.

    The rho/rho'/rho'' combination simplifies to the rational expression
    1 + 2*n1*(r*t+S) / (S*(1+r)*(kappa0-kappa1)), which stays finite through
    inflections.
    """
    _require_noncircular(profile, tol)
    t = float(t)
    S = profile.arc_length
    if not (math.isfinite(t) and -1e-12 * max(1.0, S) <= t <= S * (1.0 + 1e-12) + 1e-12):
        raise DomainError(f"parameter t={t!r} outside [0, {S}]")
    t = min(max(t, 0.0), S)
    c = S * (1.0 + profile.r) * (profile.kappa0 - profile.kappa1)
    return 1.0 + 2.0 * profile.n1 * (profile.r * t + S) / c


def gradient_line(profile: GcsProfile, tol: float = NEAR_INFLECTION_REL_TOL) -> LcgLine:
    """Slope and intercept of the exact linear gradient A*t + B.

    A = 2*r*n1 / ((1+r)*S*(kappa0-kappa1)) and
    B = 2*r*kappa0 / ((1+r)*(kappa0-kappa1)) - 1.
    """
    _require_noncircular(profile, tol)
    k0, k1 = profile.kappa0, profile.kappa1
    r, S = profile.r, profile.arc_length
    a = 2.0 * r * profile.n1 / ((1.0 + r) * S * (k0 - k1))
    b = 2.0 * r * k0 / ((1.0 + r) * (k0 - k1)) - 1.0
    return LcgLine(a, b, (0.0, S))


def line_residual(profile: GcsProfile, line: LcgLine, num: int = 50) -> float:
    """Max deviation of the exact gradient from the line over a uniform grid."""
    if num < 2:
        raise DomainError(f"num must be >= 2, got {num!r}")
    grid = np.linspace(0.0, profile.arc_length, num)
    worst = 0.0
    for t in grid.tolist():
        worst = max(worst, abs(gradient_gcs(profile, t) - line(t)))
    return worst


def classify_aesthetic(
    line: LcgLine,
    residual: float,
    tol_a: Optional[float] = None,
    tol_fit: float = 1e-6,
) -> AestheticClass:
    """Apply the linear-gradient criterion to a fitted gradient line.

    LOG_AESTHETIC: gradient constant within tol_a and linear within tol_fit.
    GCS: gradient linear within tol_fit but not constant. OTHER: the linear
    model itself misfits (residual > tol_fit). tol_a defaults to 1e-6 per
    unit of the line's domain span.
    """
    span = line.domain[1] - line.domain[0]
    if tol_a is None:
        tol_a = 1e-6 / span
    if not (tol_a > 0.0 and tol_fit > 0.0):
        raise DomainError(f"tolerances must be > 0, got tol_a={tol_a!r}, tol_fit={tol_fit!r}")
    if residual < 0.0 or not math.isfinite(residual):
        raise DomainError(f"residual must be finite and >= 0, got {residual!r}")
    if residual > tol_fit:
        return AestheticClass.OTHER
    if abs(line.slope_a) <= tol_a:
        return AestheticClass.LOG_AESTHETIC
    return AestheticClass.GCS


def gradient_from_samples(
    curve: PlanarCurve,
) -> tuple[list[tuple[float, float]], LcgLine]:
    """Estimate the LCG gradient from a uniformly sampled curve and fit a line.

    Radius of curvature is taken as 1/kappa per sample; rho' and rho'' come
    from second-order central differences with second-order one-sided
    stencils at the two boundary samples. The ordinary-least-squares line is
    fitted over interior samples only and reported with its max residual.
    Requires at least 7 samples and strictly monotone curvature.
    """
    n = len(curve)
    if n < 7:
        raise DomainError(f"need at least 7 samples to estimate the gradient, got {n}")
    s = curve.s
    kappa = curve.kappa
    gaps = np.diff(s)
    h = float(gaps[0])
    if not np.allclose(gaps, h, rtol=1e-9, atol=0.0):
        raise DomainError("gradient estimation requires uniform arc-length sampling")

    scale = max(float(np.max(np.abs(kappa))), 1.0 / curve.total_length)
    dk = np.diff(kappa)
    if np.all(np.abs(dk) <= 1e-12 * scale):
        raise DegenerateDataError("curvature is constant (circular arc): LCG gradient undefined")
    if np.any(dk >= 0.0) and np.any(dk <= 0.0):
        raise DegenerateDataError(
            "curvature is not strictly monotone (interior extremum or flat run)"
        )

    with np.errstate(divide="ignore", over="ignore"):
        rho = 1.0 / kappa
    rho_p = np.empty(n)
    rho_p[1:-1] = (rho[2:] - rho[:-2]) / (2.0 * h)
    rho_p[0] = (-3.0 * rho[0] + 4.0 * rho[1] - rho[2]) / (2.0 * h)
    rho_p[-1] = (3.0 * rho[-1] - 4.0 * rho[-2] + rho[-3]) / (2.0 * h)
    rho_pp = np.empty(n)
    rho_pp[1:-1] = (rho[2:] - 2.0 * rho[1:-1] + rho[:-2]) / (h * h)
    rho_pp[0] = (2.0 * rho[0] - 5.0 * rho[1] + 4.0 * rho[2] - rho[3]) / (h * h)
    rho_pp[-1] = (2.0 * rho[-1] - 5.0 * rho[-2] + 4.0 * rho[-3] - rho[-4]) / (h * h)

    keep = np.abs(kappa) >= NEAR_INFLECTION_REL_TOL * scale
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        grad = 1.0 - rho * rho_pp / (rho_p * rho_p)
    keep &= np.isfinite(grad)
    if int(np.count_nonzero(keep)) < 3:
        raise DegenerateDataError("too few usable samples after excluding inflections")

    trace = [(float(s[i]), float(grad[i])) for i in range(n) if keep[i]]

    interior = keep.copy()
    interior[0] = interior[-1] = False
    s_fit = s[interior]
    g_fit = grad[interior]
    if len(s_fit) < 2:
        raise DegenerateDataError("too few interior samples to fit a gradient line")
    slope, intercept = np.polyfit(s_fit, g_fit, 1)
    residual = float(np.max(np.abs(g_fit - (slope * s_fit + intercept))))
    line = LcgLine(float(slope), float(intercept), (float(s[0]), float(s[-1])), residual)
    return trace, line


# -- serialization -------------------------------------------------------

def _write_text(target: Union[str, IO[str]], text: str) -> None:
    if hasattr(target, "write"):
        target.write(text)
    else:
        with open(target, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def lcg_points_to_csv(points: Sequence[LcgPoint], target: Union[str, IO[str]]) -> None:
    rows = ["t,log_rho,log_freq"]
    for p in points:
        rows.append(f"{p.t:.17g},{p.log_rho:.17g},{p.log_freq:.17g}")
    _write_text(target, "\n".join(rows) + "\n")


def gradient_to_csv(
    samples: Sequence[tuple[float, float]], target: Union[str, IO[str]]
) -> None:
    rows = ["s,gradient"]
    for s_val, g_val in samples:
        rows.append(f"{s_val:.17g},{g_val:.17g}")
    _write_text(target, "\n".join(rows) + "\n")


def lcg_line_to_json_dict(line: LcgLine, aesthetic: AestheticClass) -> dict:
    return {
        "A": line.slope_a,
        "B": line.intercept_b,
        "domain": [line.domain[0], line.domain[1]],
        "residual": line.residual,
        "class": aesthetic.value,
    }


def lcg_line_to_json(line: LcgLine, aesthetic: AestheticClass) -> str:
    return json.dumps(lcg_line_to_json_dict(line, aesthetic))
