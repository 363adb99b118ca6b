"""Discrete radius-of-curvature histogram (LDDC) and its analytic cross-check.

The histogram accumulates, per log10(rho) bin, the arc length of curve
segments whose midpoint radius of curvature falls in the bin. For
rational-linear profiles the same quantity has a closed form: the rho(s)
map is invertible on each sign-constant piece, so the exact arc length in
any rho interval follows from inverting rho at the bin edges. The discrete
histogram must converge to that analytic distribution as sampling refines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO, Optional, Sequence, Union

import numpy as np

from .errors import DegenerateDataError, DomainError, MismatchedInputsError
from .lcg import NEAR_INFLECTION_REL_TOL, LcgLine
from .profiles import GcsProfile, coefficient_scale, inflection
from .svg import bar_chart_svg
from .synthesis import PlanarCurve

__all__ = [
    "LddcHistogram",
    "LddcComparison",
    "lddc_histogram",
    "lddc_vs_lcg",
    "lddc_to_csv",
    "lddc_from_csv",
    "lddc_to_svg",
    "comparison_to_csv",
]


@dataclass(frozen=True)
class LddcHistogram:
    """Arc length accumulated per log10 radius-of-curvature bin."""

    bin_edges: np.ndarray
    lengths: np.ndarray
    total_length: float
    excluded_length: float = 0.0

    def __post_init__(self):
        edges = np.asarray(self.bin_edges, dtype=float)
        lengths = np.asarray(self.lengths, dtype=float)
        if edges.ndim != 1 or len(edges) < 2:
            raise DomainError("bin_edges must hold at least 2 values")
        if not np.all(np.isfinite(edges)):
            raise DomainError("bin_edges must be finite")
        if not np.all(np.diff(edges) > 0.0):
            raise DomainError("bin_edges must be strictly increasing")
        if lengths.ndim != 1 or len(lengths) != len(edges) - 1:
            raise DomainError("need exactly one length per bin")
        if np.any(lengths < 0.0) or not np.all(np.isfinite(lengths)):
            raise DomainError("bin lengths must be finite and >= 0")
        if not (self.total_length > 0.0 and math.isfinite(self.total_length)):
            raise DomainError(f"total_length must be finite and > 0, got {self.total_length!r}")
        if self.excluded_length < 0.0:
            raise DomainError("excluded_length must be >= 0")
        object.__setattr__(self, "bin_edges", edges)
        object.__setattr__(self, "lengths", lengths)

    @property
    def num_bins(self) -> int:
        return len(self.lengths)


def lddc_histogram(
    curve: PlanarCurve,
    num_bins: int,
    edges: Optional[Sequence[float]] = None,
) -> LddcHistogram:
    """Bin each inter-sample segment by its midpoint radius of curvature.

    The segment between samples i and i+1 contributes its full arc length to
    the bin containing log10(1/|kappa_mid|), with kappa_mid the mean of the
    endpoint curvatures. Segments whose |kappa_mid| falls below the
    near-inflection threshold are excluded and their total length reported.
    With no explicit `edges`, bins span the observed log10 range (padded by
    half a decade each way when the range is degenerate, e.g. for a circle).
    """
    if num_bins < 1:
        raise DomainError(f"num_bins must be >= 1, got {num_bins!r}")
    seg_len = np.diff(curve.s)
    kappa_mid = 0.5 * (curve.kappa[:-1] + curve.kappa[1:])
    scale = max(float(np.max(np.abs(curve.kappa))), 1.0 / curve.total_length)
    include = np.abs(kappa_mid) >= NEAR_INFLECTION_REL_TOL * scale
    excluded = float(np.sum(seg_len[~include]))
    if not np.any(include):
        raise DegenerateDataError(
            "every segment is effectively straight; radius of curvature is undefined"
        )

    log_rho = -np.log10(np.abs(kappa_mid[include]))
    weights = seg_len[include]

    if edges is None:
        lo = float(np.min(log_rho))
        hi = float(np.max(log_rho))
        if hi - lo < 1e-12:
            lo -= 0.5
            hi += 0.5
        edge_arr = np.linspace(lo, hi, num_bins + 1)
    else:
        edge_arr = np.asarray(edges, dtype=float)
        if len(edge_arr) != num_bins + 1:
            raise DomainError(
                f"explicit edges must hold num_bins+1 = {num_bins + 1} values, got {len(edge_arr)}"
            )
        # Out-of-range segments are treated like excluded ones.
        in_range = (log_rho >= edge_arr[0]) & (log_rho <= edge_arr[-1])
        excluded += float(np.sum(weights[~in_range]))
        log_rho = log_rho[in_range]
        weights = weights[in_range]

    idx = np.clip(np.searchsorted(edge_arr, log_rho, side="right") - 1, 0, num_bins - 1)
    lengths = np.zeros(num_bins)
    np.add.at(lengths, idx, weights)
    return LddcHistogram(edge_arr, lengths, curve.total_length, excluded)


@dataclass(frozen=True)
class LddcComparison:
    """Measured vs analytically predicted arc length per histogram bin."""

    bin_edges: np.ndarray
    measured: np.ndarray
    predicted: np.ndarray
    max_abs_deviation: float


def _invert_abs_rho(profile: GcsProfile, sign: float, rho_abs: float, lo: float, hi: float) -> float:
    """Arc length where the signed radius equals sign*rho_abs, clamped to [lo, hi].

    Solving (r*s + S)/(n1*s + n0) = rho_signed gives
    s = (S - rho_signed*n0) / (rho_signed*n1 - r).
    """
    rho_signed = sign * rho_abs
    den = rho_signed * profile.n1 - profile.r
    if den == 0.0:
        # rho pole of the inverse; the corresponding s lies beyond the piece.
        return hi if sign * profile.n1 >= 0.0 else lo
    s = (profile.arc_length - rho_signed * profile.n0) / den
    return min(max(s, lo), hi)


def _piece_length_in_band(
    profile: GcsProfile, lo: float, hi: float, rho_a: float, rho_b: float
) -> float:
    """Arc length of {s in [lo, hi] : |rho(s)| in [rho_a, rho_b]} for one piece.

    The piece must not contain an interior inflection so that |rho| is
    monotone on it.
    """
    mid = 0.5 * (lo + hi)
    k_mid = profile.kappa(mid)
    sign = 1.0 if k_mid >= 0.0 else -1.0

    def abs_rho_at(s: float) -> float:
        k = profile.kappa(s)
        if k == 0.0:
            return math.inf
        return abs(1.0 / k)

    end_lo, end_hi = abs_rho_at(lo), abs_rho_at(hi)
    piece_min = min(end_lo, end_hi)
    piece_max = max(end_lo, end_hi)
    band_lo = max(rho_a, piece_min)
    band_hi = min(rho_b, piece_max)
    if band_lo >= band_hi:
        return 0.0
    s_at_lo = lo if band_lo == piece_min and end_lo <= end_hi else (
        hi if band_lo == piece_min else _invert_abs_rho(profile, sign, band_lo, lo, hi)
    )
    if band_hi == piece_max:
        s_at_hi = lo if end_lo >= end_hi else hi
    else:
        s_at_hi = _invert_abs_rho(profile, sign, band_hi, lo, hi)
    return abs(s_at_hi - s_at_lo)


def lddc_vs_lcg(
    histogram: LddcHistogram,
    line: LcgLine,
    profile: GcsProfile,
) -> LddcComparison:
    """Compare measured bin lengths against the exact rho-inversion prediction.

    The profile's |rho(s)| is monotone on each side of its (at most one)
    inflection, so the exact arc length inside any rho band is obtained by
    inverting rho at the band edges piece by piece.
    """
    S = profile.arc_length
    if abs(histogram.total_length - S) > 1e-9 * max(1.0, S):
        raise MismatchedInputsError(
            f"histogram covers length {histogram.total_length!r} but the profile has {S!r}"
        )
    if abs(line.domain[0]) > 1e-9 * max(1.0, S) or abs(line.domain[1] - S) > 1e-9 * max(1.0, S):
        raise MismatchedInputsError(
            f"gradient line domain {line.domain!r} does not match the profile's [0, {S}]"
        )
    if abs(profile.kappa0 - profile.kappa1) <= NEAR_INFLECTION_REL_TOL * coefficient_scale(profile):
        raise MismatchedInputsError(
            "profile has constant curvature: the radius range is a point and not invertible"
        )

    s_star = inflection(profile)
    pieces: list[tuple[float, float]] = []
    if s_star is not None and 0.0 < s_star < S:
        pieces = [(0.0, s_star), (s_star, S)]
    else:
        pieces = [(0.0, S)]

    edges = histogram.bin_edges
    predicted = np.zeros(histogram.num_bins)
    for i in range(histogram.num_bins):
        rho_a = 10.0 ** float(edges[i])
        rho_b = 10.0 ** float(edges[i + 1])
        predicted[i] = sum(
            _piece_length_in_band(profile, lo, hi, rho_a, rho_b) for lo, hi in pieces
        )
    deviation = float(np.max(np.abs(histogram.lengths - predicted)))
    return LddcComparison(edges.copy(), histogram.lengths.copy(), predicted, deviation)


# -- serialization -------------------------------------------------------

_LDDC_HEADER = "bin_lo_log10rho,bin_hi_log10rho,length"


def _write_text(target: Union[str, IO[str]], text: str) -> None:
    if hasattr(target, "write"):
        target.write(text)
    else:
        with open(target, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def lddc_to_csv(histogram: LddcHistogram, target: Union[str, IO[str]]) -> None:
    rows = [_LDDC_HEADER]
    for i in range(histogram.num_bins):
        rows.append(
            f"{histogram.bin_edges[i]:.17g},{histogram.bin_edges[i + 1]:.17g},"
            f"{histogram.lengths[i]:.17g}"
        )
    _write_text(target, "\n".join(rows) + "\n")


def lddc_from_csv(source: Union[str, IO[str]]) -> LddcHistogram:
    """Rebuild a histogram from its CSV form.

    The CSV does not carry the excluded length, so the rebuilt total equals
    the sum of the stored bins.
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != _LDDC_HEADER:
        raise DomainError(f"LDDC CSV must start with header '{_LDDC_HEADER}'")
    lo_edges: list[float] = []
    hi_edges: list[float] = []
    lengths: list[float] = []
    for ln in lines[1:]:
        parts = ln.split(",")
        if len(parts) != 3:
            raise DomainError(f"LDDC CSV row has {len(parts)} fields, expected 3: {ln!r}")
        try:
            lo, hi, length = (float(p) for p in parts)
        except ValueError:
            raise DomainError(f"LDDC CSV row is not numeric: {ln!r}") from None
        lo_edges.append(lo)
        hi_edges.append(hi)
        lengths.append(length)
    if not lengths:
        raise DomainError("LDDC CSV holds no bins")
    for i in range(1, len(lo_edges)):
        if lo_edges[i] != hi_edges[i - 1]:
            raise DomainError("LDDC CSV bins must be contiguous")
    edges = lo_edges + [hi_edges[-1]]
    total = sum(lengths)
    if total <= 0.0:
        raise DomainError("LDDC CSV carries no arc length")
    return LddcHistogram(np.asarray(edges), np.asarray(lengths), total)


def lddc_to_svg(histogram: LddcHistogram, target: Union[str, IO[str]]) -> None:
    _write_text(
        target,
        bar_chart_svg(
            histogram.bin_edges.tolist(),
            histogram.lengths.tolist(),
            x_label="log10 rho",
            y_label="log10 length",
        ),
    )


def comparison_to_csv(comparison: LddcComparison, target: Union[str, IO[str]]) -> None:
    rows = ["bin_lo_log10rho,bin_hi_log10rho,measured_length,predicted_length"]
    for i in range(len(comparison.measured)):
        rows.append(
            f"{comparison.bin_edges[i]:.17g},{comparison.bin_edges[i + 1]:.17g},"
            f"{comparison.measured[i]:.17g},{comparison.predicted[i]:.17g}"
        )
    _write_text(target, "\n".join(rows) + "\n")
