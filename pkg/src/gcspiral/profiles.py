"""Planar curvature profiles and their exact tangent-angle antiderivatives.

A profile prescribes signed curvature kappa(s) on an arc-length interval
[0, S].  Four families are provided: constant, linear and quadratic
polynomials, and the rational-linear family

    kappa(s) = (n1*s + n0) / (r*s + S),   n1 = k1 - k0 + r*k1,  n0 = k0*S,

whose synthesized curve is the Generalized Cornu Spiral (GCS).  The shape
factor is restricted to r > -1 so the denominator stays positive on [0, S].
Every profile exposes kappa(s), kappa_prime(s) and theta(s) with the
convention theta(0) = 0; the starting pose is applied by the synthesis layer.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from typing import Union

from .errors import DomainError

__all__ = [
    "ConstantProfile",
    "LinearProfile",
    "QuadraticProfile",
    "GcsProfile",
    "CurvatureProfile",
    "DegenerateClass",
    "classify_degenerate",
    "inflection",
    "to_gcs",
    "profile_to_dict",
    "profile_from_dict",
    "profile_to_json",
    "profile_from_json",
]


def _finite(name: str, value) -> float:
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be a real number, got {value!r}") from None
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


def _check_arc_length(arc_length: float) -> None:
    if not arc_length > 0.0:
        raise DomainError(f"arc_length must be > 0, got {arc_length!r}")


def _clamp_s(s, arc_length: float) -> float:
    """Validate s in [0, S] (tiny roundoff slack) and clamp onto the interval."""
    s = float(s)
    slack = 1e-12 * max(1.0, arc_length)
    if not math.isfinite(s) or s < -slack or s > arc_length + slack:
        raise DomainError(f"arc length s={s!r} outside [0, {arc_length}]")
    return min(max(s, 0.0), arc_length)


def _log1p_remainder(u: float) -> float:
    """(u - log1p(u)) / u**2, continued by 1/2 at u = 0.

    The direct expression cancels catastrophically for small |u|; a series
    branch keeps full precision there.
    """
    if abs(u) < 0.25:
        total = 0.0
        power = 1.0
        for k in range(64):
            term = power / (k + 2)
            total += term
            power *= -u
            if abs(term) <= 1e-18 * abs(total):
                break
        return total
    # Grouped to avoid overflow of u*u for very large shape factors.
    return (1.0 - math.log1p(u) / u) / u


@dataclass(frozen=True)
class ConstantProfile:
    """Constant curvature: a circular arc (or a straight line when kappa=0)."""

    kappa_value: float
    arc_length: float

    def __post_init__(self):
        object.__setattr__(self, "kappa_value", _finite("kappa", self.kappa_value))
        object.__setattr__(self, "arc_length", _finite("arc_length", self.arc_length))
        _check_arc_length(self.arc_length)

    def kappa(self, s) -> float:
        _clamp_s(s, self.arc_length)
        return self.kappa_value

    def kappa_prime(self, s) -> float:
        _clamp_s(s, self.arc_length)
        return 0.0

    def theta(self, s) -> float:
        return self.kappa_value * _clamp_s(s, self.arc_length)


@dataclass(frozen=True)
class LinearProfile:
    """Linear curvature interpolating kappa0 at s=0 and kappa1 at s=S (a clothoid segment)."""

    kappa0: float
    kappa1: float
    arc_length: float

    def __post_init__(self):
        object.__setattr__(self, "kappa0", _finite("kappa0", self.kappa0))
        object.__setattr__(self, "kappa1", _finite("kappa1", self.kappa1))
        object.__setattr__(self, "arc_length", _finite("arc_length", self.arc_length))
        _check_arc_length(self.arc_length)

    def kappa(self, s) -> float:
        s = _clamp_s(s, self.arc_length)
        w = s / self.arc_length
        return (1.0 - w) * self.kappa0 + w * self.kappa1

    def kappa_prime(self, s) -> float:
        _clamp_s(s, self.arc_length)
        return (self.kappa1 - self.kappa0) / self.arc_length

    def theta(self, s) -> float:
        s = _clamp_s(s, self.arc_length)
        return self.kappa0 * s + (self.kappa1 - self.kappa0) * s * s / (2.0 * self.arc_length)


@dataclass(frozen=True)
class QuadraticProfile:
    """Quadratic curvature a*s^2 + b*s + kappa0 with b chosen so kappa(S) = kappa1.

    `a` is a free shape parameter; a = 0 reduces to the linear profile.
    """

    a: float
    kappa0: float
    kappa1: float
    arc_length: float

    def __post_init__(self):
        object.__setattr__(self, "a", _finite("a", self.a))
        object.__setattr__(self, "kappa0", _finite("kappa0", self.kappa0))
        object.__setattr__(self, "kappa1", _finite("kappa1", self.kappa1))
        object.__setattr__(self, "arc_length", _finite("arc_length", self.arc_length))
        _check_arc_length(self.arc_length)

    @property
    def b(self) -> float:
        S = self.arc_length
        return (self.kappa1 - self.kappa0 - self.a * S * S) / S

    def kappa(self, s) -> float:
        s = _clamp_s(s, self.arc_length)
        return (self.a * s + self.b) * s + self.kappa0

    def kappa_prime(self, s) -> float:
        s = _clamp_s(s, self.arc_length)
        return 2.0 * self.a * s + self.b

    def theta(self, s) -> float:
        s = _clamp_s(s, self.arc_length)
        return ((self.a * s / 3.0 + self.b / 2.0) * s + self.kappa0) * s


@dataclass(frozen=True)
class GcsProfile:
    """Rational-linear curvature kappa(s) = (n1*s + n0) / (r*s + S).

    Construction from endpoint data (kappa0, kappa1, S, r) caches the
    numerator coefficients n1 = kappa1 - kappa0 + r*kappa1 and n0 = kappa0*S,
    which interpolate the end curvatures exactly.  Requires S > 0 and r > -1.
    """

    kappa0: float
    kappa1: float
    arc_length: float
    r: float
    n1: float = field(init=False, repr=False, compare=False)
    n0: float = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "kappa0", _finite("kappa0", self.kappa0))
        object.__setattr__(self, "kappa1", _finite("kappa1", self.kappa1))
        object.__setattr__(self, "arc_length", _finite("arc_length", self.arc_length))
        object.__setattr__(self, "r", _finite("r", self.r))
        _check_arc_length(self.arc_length)
        if not self.r > -1.0:
            raise DomainError(f"shape factor r must be > -1, got {self.r!r}")
        n1 = self.kappa1 - self.kappa0 + self.r * self.kappa1
        n0 = self.kappa0 * self.arc_length
        if not (math.isfinite(n1) and math.isfinite(n0)):
            raise DomainError("profile parameters overflow the curvature coefficients")
        object.__setattr__(self, "n1", n1)
        object.__setattr__(self, "n0", n0)

    def kappa(self, s) -> float:
        s = _clamp_s(s, self.arc_length)
        return (self.n1 * s + self.n0) / (self.r * s + self.arc_length)

    def kappa_prime(self, s) -> float:
        s = _clamp_s(s, self.arc_length)
        den = self.r * s + self.arc_length
        return (self.n1 * self.arc_length - self.n0 * self.r) / (den * den)

    def theta(self, s) -> float:
        # kappa0*s + (1+r)(kappa1-kappa0)*(s^2/S)*f(r*s/S) with
        # f(u) = (u - log1p(u))/u^2; equal to the log antiderivative for
        # r != 0 and free of the removable singularity at r = 0.
        s = _clamp_s(s, self.arc_length)
        S = self.arc_length
        u = self.r * s / S
        rem = _log1p_remainder(u)
        return self.kappa0 * s + (1.0 + self.r) * (self.kappa1 - self.kappa0) * (s * s / S) * rem


CurvatureProfile = Union[ConstantProfile, LinearProfile, QuadraticProfile, GcsProfile]


class DegenerateClass(enum.Enum):
    """Subfamily of a GCS profile read off its rational-curvature coefficients."""

    STRAIGHT_LINE = "straight_line"
    CIRCULAR_ARC = "circular_arc"
    LOG_SPIRAL = "log_spiral"
    CLOTHOID = "clothoid"
    GENERAL_GCS = "general_gcs"


def coefficient_scale(profile: GcsProfile) -> float:
    """Curvature-unit magnitude used for relative tolerance comparisons."""
    return max(abs(profile.kappa0), abs(profile.kappa1), 1.0 / profile.arc_length)


def classify_degenerate(profile: GcsProfile, tol: float = 1e-12) -> DegenerateClass:
    """Classify which subfamily the profile degenerates to.

    Curvature-valued quantities are compared against tol * coefficient_scale;
    the dimensionless shape factor r against tol directly.  Branches are
    checked in order, so the classes are mutually exclusive and exhaustive.
    """
    if tol < 0.0:
        raise DomainError(f"tol must be >= 0, got {tol!r}")
    k_tol = tol * coefficient_scale(profile)
    if abs(profile.kappa0) <= k_tol and abs(profile.kappa1) <= k_tol:
        return DegenerateClass.STRAIGHT_LINE
    if abs(profile.r) <= tol and abs(profile.kappa0 - profile.kappa1) <= k_tol:
        return DegenerateClass.CIRCULAR_ARC
    if abs(profile.n1) <= k_tol and abs(profile.r) > tol:
        return DegenerateClass.LOG_SPIRAL
    if abs(profile.r) <= tol:
        return DegenerateClass.CLOTHOID
    return DegenerateClass.GENERAL_GCS


def inflection(profile: GcsProfile) -> float | None:
    """Arc length where curvature crosses zero, or None.

    The numerator n1*s + n0 has at most one root, so a GCS inflects at most
    once, at s = -n0/n1 when that lands inside [0, S].
    """
    if profile.n1 == 0.0:
        return None
    s_star = -profile.n0 / profile.n1
    if 0.0 <= s_star <= profile.arc_length:
        return s_star + 0.0  # normalize -0.0
    return None


def to_gcs(profile: CurvatureProfile) -> GcsProfile | None:
    """Re-express a profile in the rational-linear family, if possible."""
    if isinstance(profile, GcsProfile):
        return profile
    if isinstance(profile, ConstantProfile):
        return GcsProfile(profile.kappa_value, profile.kappa_value, profile.arc_length, 0.0)
    if isinstance(profile, LinearProfile):
        return GcsProfile(profile.kappa0, profile.kappa1, profile.arc_length, 0.0)
    if isinstance(profile, QuadraticProfile) and profile.a == 0.0:
        return GcsProfile(profile.kappa0, profile.kappa1, profile.arc_length, 0.0)
    return None


# -- JSON serialization -------------------------------------------------

def profile_to_dict(profile: CurvatureProfile) -> dict:
    if isinstance(profile, ConstantProfile):
        return {"type": "constant", "kappa": profile.kappa_value, "arc_length": profile.arc_length}
    if isinstance(profile, LinearProfile):
        return {
            "type": "linear",
            "kappa0": profile.kappa0,
            "kappa1": profile.kappa1,
            "arc_length": profile.arc_length,
        }
    if isinstance(profile, QuadraticProfile):
        return {
            "type": "quadratic",
            "a": profile.a,
            "kappa0": profile.kappa0,
            "kappa1": profile.kappa1,
            "arc_length": profile.arc_length,
        }
    if isinstance(profile, GcsProfile):
        return {
            "type": "gcs",
            "kappa0": profile.kappa0,
            "kappa1": profile.kappa1,
            "arc_length": profile.arc_length,
            "r": profile.r,
        }
    raise DomainError(f"not a curvature profile: {profile!r}")


def profile_from_dict(data: dict) -> CurvatureProfile:
    if not isinstance(data, dict):
        raise DomainError(f"profile document must be a JSON object, got {type(data).__name__}")
    kind = data.get("type")
    try:
        if kind == "constant":
            return ConstantProfile(data["kappa"], data["arc_length"])
        if kind == "linear":
            return LinearProfile(data["kappa0"], data["kappa1"], data["arc_length"])
        if kind == "quadratic":
            return QuadraticProfile(data["a"], data["kappa0"], data["kappa1"], data["arc_length"])
        if kind == "gcs":
            return GcsProfile(data["kappa0"], data["kappa1"], data["arc_length"], data["r"])
    except KeyError as exc:
        raise DomainError(f"profile document missing field {exc.args[0]!r}") from None
    raise DomainError(f"unknown profile type {kind!r}")


def profile_to_json(profile: CurvatureProfile) -> str:
    return json.dumps(profile_to_dict(profile))


def profile_from_json(text: str) -> CurvatureProfile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid profile JSON: {exc}") from None
    return profile_from_dict(data)
