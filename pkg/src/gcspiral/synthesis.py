"""Curve synthesis: positions from curvature via tangent-angle integration.

A planar curve is recovered from its curvature profile by integrating the
unit tangent (cos(theta0 + theta(t)), sin(theta0 + theta(t))) in arc length.
Samples are laid out uniformly in s; each inter-sample gap is integrated
adaptively and accumulated, so sample i+1 always reuses the prefix up to
sample i instead of re-integrating from zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import IO, Union

import numpy as np

from .errors import DomainError
from .profiles import CurvatureProfile, profile_to_dict
from .quadrature import adaptive_tangent_integral, gauss_legendre_adaptive
from .svg import polyline_svg

__all__ = [
    "Pose",
    "QuadratureConfig",
    "EndState",
    "PlanarCurve",
    "synthesize",
    "endpoint",
    "frames",
    "curve_to_csv",
    "curve_from_csv",
    "curve_to_svg",
]


@dataclass(frozen=True)
class Pose:
    """Starting position and tangent direction of a synthesized curve."""

    x0: float = 0.0
    y0: float = 0.0
    theta0: float = 0.0

    def __post_init__(self):
        for name in ("x0", "y0", "theta0"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v)):
                raise DomainError(f"pose field {name} must be finite, got {v!r}")
            object.__setattr__(self, name, float(v))


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerance and sampling knobs for synthesis.

    abs_tol bounds the absolute error of each coordinate integral over any
    prefix [0, s_i]; the per-gap budget is abs_tol / (N - 1) so accumulated
    gap errors stay within it.
    """

    abs_tol: float = 1e-10
    max_subdivisions: int = 40
    samples_per_curve: int = 256

    def __post_init__(self):
        if not (isinstance(self.abs_tol, (int, float)) and self.abs_tol > 0.0):
            raise DomainError(f"abs_tol must be > 0, got {self.abs_tol!r}")
        if self.max_subdivisions < 1:
            raise DomainError(f"max_subdivisions must be >= 1, got {self.max_subdivisions!r}")
        if self.samples_per_curve < 2:
            raise DomainError(f"samples_per_curve must be >= 2, got {self.samples_per_curve!r}")


@dataclass(frozen=True)
class EndState:
    """Final position and tangent angle of a synthesized curve."""

    x: float
    y: float
    theta: float


@dataclass(frozen=True)
class PlanarCurve:
    """Arc-length-sampled polyline with tangent angle and curvature per sample."""

    s: np.ndarray
    x: np.ndarray
    y: np.ndarray
    theta: np.ndarray
    kappa: np.ndarray
    profile_descriptor: dict = field(default_factory=dict)

    def __post_init__(self):
        arrays = {}
        for name in ("s", "x", "y", "theta", "kappa"):
            arr = np.asarray(getattr(self, name), dtype=float)
            if arr.ndim != 1:
                raise DomainError(f"curve field {name} must be one-dimensional")
            if not np.all(np.isfinite(arr)):
                raise DomainError(f"curve field {name} contains non-finite values")
            arrays[name] = arr
            object.__setattr__(self, name, arr)
        n = len(arrays["s"])
        if n < 2:
            raise DomainError("a curve needs at least 2 samples")
        for name, arr in arrays.items():
            if len(arr) != n:
                raise DomainError("curve sample columns must have equal length")
        if not np.all(np.diff(arrays["s"]) > 0.0):
            raise DomainError("arc-length samples must be strictly increasing")

    def __len__(self) -> int:
        return len(self.s)

    @property
    def total_length(self) -> float:
        return float(self.s[-1] - self.s[0])


def synthesize(
    profile: CurvatureProfile,
    pose: Pose = Pose(),
    config: QuadratureConfig = QuadratureConfig(),
) -> PlanarCurve:
    """Sample the curve whose curvature is `profile`, starting at `pose`.

    Returns N = config.samples_per_curve samples uniformly spaced in arc
    length on [0, S]; positions accumulate adaptive integrals of the unit
    tangent gap by gap. Raises QuadratureError if any gap cannot meet its
    error budget.
    """
    S = profile.arc_length
    n = config.samples_per_curve
    s_grid = np.linspace(0.0, S, n)
    gap_tol = config.abs_tol / (n - 1)

    def angle(t: float) -> float:
        return pose.theta0 + profile.theta(t)

    xs = np.empty(n)
    ys = np.empty(n)
    xs[0] = pose.x0
    ys[0] = pose.y0
    for i in range(n - 1):
        dx, dy = adaptive_tangent_integral(
            angle, float(s_grid[i]), float(s_grid[i + 1]), gap_tol, config.max_subdivisions
        )
        xs[i + 1] = xs[i] + dx
        ys[i + 1] = ys[i] + dy

    thetas = np.fromiter((angle(float(t)) for t in s_grid), dtype=float, count=n)
    kappas = np.fromiter((profile.kappa(float(t)) for t in s_grid), dtype=float, count=n)
    return PlanarCurve(s_grid, xs, ys, thetas, kappas, profile_to_dict(profile))


def endpoint(
    profile: CurvatureProfile,
    pose: Pose = Pose(),
    config: QuadratureConfig = QuadratureConfig(),
    scheme: str = "simpson",
) -> EndState:
    """Final state at s = S via a single whole-interval integration.

    scheme selects the integration family: "simpson" (adaptive Simpson) or
    "gauss" (panel-doubling composite Gauss-Legendre). The two are
    independent implementations and serve as mutual cross-checks.
    """
    S = profile.arc_length

    def angle(t: float) -> float:
        return pose.theta0 + profile.theta(t)

    if scheme == "simpson":
        dx, dy = adaptive_tangent_integral(angle, 0.0, S, config.abs_tol, config.max_subdivisions)
    elif scheme == "gauss":
        dx = gauss_legendre_adaptive(lambda t: math.cos(angle(t)), 0.0, S, config.abs_tol)
        dy = gauss_legendre_adaptive(lambda t: math.sin(angle(t)), 0.0, S, config.abs_tol)
    else:
        raise DomainError(f"unknown quadrature scheme {scheme!r}")
    return EndState(pose.x0 + dx, pose.y0 + dy, angle(S))


def frames(curve: PlanarCurve) -> tuple[np.ndarray, np.ndarray]:
    """Per-sample unit tangent and unit normal (tangent rotated +90 degrees)."""
    tangent = np.column_stack((np.cos(curve.theta), np.sin(curve.theta)))
    normal = np.column_stack((-tangent[:, 1], tangent[:, 0]))
    return tangent, normal


# -- serialization -------------------------------------------------------

_CURVE_HEADER = "s,x,y,theta,kappa"


def _write_text(target: Union[str, IO[str]], text: str) -> None:
    if hasattr(target, "write"):
        target.write(text)
    else:
        with open(target, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def curve_to_csv(curve: PlanarCurve, target: Union[str, IO[str]]) -> None:
    """Write `s,x,y,theta,kappa` rows with round-trip-exact formatting."""
    rows = [_CURVE_HEADER]
    for i in range(len(curve)):
        rows.append(
            ",".join(
                f"{v:.17g}"
                for v in (curve.s[i], curve.x[i], curve.y[i], curve.theta[i], curve.kappa[i])
            )
        )
    _write_text(target, "\n".join(rows) + "\n")


def curve_from_csv(source: Union[str, IO[str]]) -> PlanarCurve:
    if hasattr(source, "read"):
        text = source.read()
        origin = "<stream>"
    else:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
        origin = str(source)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != _CURVE_HEADER:
        raise DomainError(f"curve CSV must start with header '{_CURVE_HEADER}'")
    data = []
    for ln in lines[1:]:
        parts = ln.split(",")
        if len(parts) != 5:
            raise DomainError(f"curve CSV row has {len(parts)} fields, expected 5: {ln!r}")
        try:
            data.append([float(p) for p in parts])
        except ValueError:
            raise DomainError(f"curve CSV row is not numeric: {ln!r}") from None
    if len(data) < 2:
        raise DomainError("curve CSV needs at least 2 sample rows")
    cols = np.asarray(data, dtype=float).T
    return PlanarCurve(cols[0], cols[1], cols[2], cols[3], cols[4], {"type": "csv", "path": origin})


def curve_to_svg(curve: PlanarCurve, target: Union[str, IO[str]], title: str = "") -> None:
    points = list(zip(curve.x.tolist(), curve.y.tolist()))
    _write_text(target, polyline_svg([points], title=title))
