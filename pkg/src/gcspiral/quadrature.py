"""Numerical integration kernels used by curve synthesis.

Two independent families are provided so results can be cross-checked:

* adaptive Simpson with Richardson error estimation (scalar and paired
  tangent-vector variants), and
* composite Gauss-Legendre with panel doubling.

The adaptive routines accept an optional phase function; a sub-interval is
never accepted while the phase swings more than pi/2 across it, because the
embedded error estimate under-reports on full oscillation periods.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .errors import DomainError, QuadratureError

__all__ = [
    "adaptive_simpson",
    "adaptive_tangent_integral",
    "gauss_legendre",
    "gauss_legendre_adaptive",
]

_MAX_PHASE_SPAN = 0.5 * math.pi


def _check_interval(a: float, b: float) -> None:
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"integration bounds must be finite, got [{a!r}, {b!r}]")
    if b < a:
        raise DomainError(f"integration bounds out of order: [{a!r}, {b!r}]")


def _raise_worst(abs_tol: float, max_subdivisions: int, failures: list) -> None:
    err, lo, hi = max(failures)
    raise QuadratureError(
        f"tolerance {abs_tol:g} not met after {max_subdivisions} subdivisions; "
        f"worst sub-interval [{lo:.17g}, {hi:.17g}] with error estimate {err:.3g}"
    )


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    abs_tol: float = 1e-10,
    max_subdivisions: int = 40,
    phase: Optional[Callable[[float], float]] = None,
) -> float:
    """Integrate f over [a, b] to within abs_tol (absolute).

    Simpson halves are accepted when the Richardson estimate |S2 - S1|/15
    falls under the local budget, which itself halves with each split.
    Raises QuadratureError when max_subdivisions levels are exhausted,
    reporting the worst offending sub-interval.
    """
    _check_interval(a, b)
    if abs_tol <= 0.0:
        raise DomainError(f"abs_tol must be > 0, got {abs_tol!r}")
    if max_subdivisions < 1:
        raise DomainError(f"max_subdivisions must be >= 1, got {max_subdivisions!r}")
    if a == b:
        return 0.0

    failures: list[tuple[float, float, float]] = []

    def recurse(lo, hi, flo, fmid, fhi, whole, plo, phi, tol, depth):
        mid = 0.5 * (lo + hi)
        lm = 0.5 * (lo + mid)
        rm = 0.5 * (mid + hi)
        flm = f(lm)
        frm = f(rm)
        left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
        delta = left + right - whole
        phase_ok = phase is None or abs(phi - plo) <= _MAX_PHASE_SPAN
        if phase_ok and abs(delta) <= 15.0 * tol:
            return left + right + delta / 15.0
        if depth <= 0:
            failures.append((abs(delta) / 15.0, lo, hi))
            return left + right + delta / 15.0
        pmid = phase(mid) if phase is not None else 0.0
        return recurse(lo, mid, flo, flm, fmid, left, plo, pmid, 0.5 * tol, depth - 1) + recurse(
            mid, hi, fmid, frm, fhi, right, pmid, phi, 0.5 * tol, depth - 1
        )

    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    pa = phase(a) if phase is not None else 0.0
    pb = phase(b) if phase is not None else 0.0
    total = recurse(a, b, fa, fm, fb, whole, pa, pb, abs_tol, max_subdivisions)
    if failures:
        _raise_worst(abs_tol, max_subdivisions, failures)
    return total


def adaptive_tangent_integral(
    theta: Callable[[float], float],
    a: float,
    b: float,
    abs_tol: float = 1e-10,
    max_subdivisions: int = 40,
) -> tuple[float, float]:
    """Integrate (cos(theta(t)), sin(theta(t))) over [a, b], each to abs_tol.

    Shares tangent-angle evaluations between the two coordinates and uses
    them directly for the phase-span safeguard.
    """
    _check_interval(a, b)
    if abs_tol <= 0.0:
        raise DomainError(f"abs_tol must be > 0, got {abs_tol!r}")
    if max_subdivisions < 1:
        raise DomainError(f"max_subdivisions must be >= 1, got {max_subdivisions!r}")
    if a == b:
        return 0.0, 0.0

    failures: list[tuple[float, float, float]] = []

    def node(t):
        ang = theta(t)
        return ang, math.cos(ang), math.sin(ang)

    def simpson(lo, hi, n_lo, n_mid, n_hi):
        w = (hi - lo) / 6.0
        return (
            w * (n_lo[1] + 4.0 * n_mid[1] + n_hi[1]),
            w * (n_lo[2] + 4.0 * n_mid[2] + n_hi[2]),
        )

    def recurse(lo, hi, n_lo, n_mid, n_hi, whole, tol, depth):
        mid = 0.5 * (lo + hi)
        n_lm = node(0.5 * (lo + mid))
        n_rm = node(0.5 * (mid + hi))
        left = simpson(lo, mid, n_lo, n_lm, n_mid)
        right = simpson(mid, hi, n_mid, n_rm, n_hi)
        dx = left[0] + right[0] - whole[0]
        dy = left[1] + right[1] - whole[1]
        err = max(abs(dx), abs(dy))
        phase_ok = abs(n_hi[0] - n_lo[0]) <= _MAX_PHASE_SPAN
        if phase_ok and err <= 15.0 * tol:
            return left[0] + right[0] + dx / 15.0, left[1] + right[1] + dy / 15.0
        if depth <= 0:
            failures.append((err / 15.0, lo, hi))
            return left[0] + right[0] + dx / 15.0, left[1] + right[1] + dy / 15.0
        lx, ly = recurse(lo, mid, n_lo, n_lm, n_mid, left, 0.5 * tol, depth - 1)
        rx, ry = recurse(mid, hi, n_mid, n_rm, n_hi, right, 0.5 * tol, depth - 1)
        return lx + rx, ly + ry

    n_a, n_m, n_b = node(a), node(0.5 * (a + b)), node(b)
    whole = simpson(a, b, n_a, n_m, n_b)
    total = recurse(a, b, n_a, n_m, n_b, whole, abs_tol, max_subdivisions)
    if failures:
        _raise_worst(abs_tol, max_subdivisions, failures)
    return total


@lru_cache(maxsize=16)
def _gl_nodes(order: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return tuple(nodes.tolist()), tuple(weights.tolist())


def gauss_legendre(
    f: Callable[[float], float],
    a: float,
    b: float,
    order: int = 16,
    panels: int = 1,
) -> float:
    """Composite Gauss-Legendre rule with `panels` equal sub-intervals."""
    _check_interval(a, b)
    if order < 1:
        raise DomainError(f"order must be >= 1, got {order!r}")
    if panels < 1:
        raise DomainError(f"panels must be >= 1, got {panels!r}")
    if a == b:
        return 0.0
    nodes, weights = _gl_nodes(order)
    h = (b - a) / panels
    total = 0.0
    for k in range(panels):
        lo = a + k * h
        center = lo + 0.5 * h
        half = 0.5 * h
        acc = 0.0
        for x, w in zip(nodes, weights):
            acc += w * f(center + half * x)
        total += half * acc
    return total


def gauss_legendre_adaptive(
    f: Callable[[float], float],
    a: float,
    b: float,
    abs_tol: float = 1e-10,
    order: int = 16,
    max_doublings: int = 16,
) -> float:
    """Double the panel count until two successive composites agree to abs_tol."""
    if abs_tol <= 0.0:
        raise DomainError(f"abs_tol must be > 0, got {abs_tol!r}")
    prev = gauss_legendre(f, a, b, order, 1)
    panels = 2
    for _ in range(max_doublings):
        cur = gauss_legendre(f, a, b, order, panels)
        if abs(cur - prev) <= abs_tol:
            return cur
        prev = cur
        panels *= 2
    raise QuadratureError(
        f"Gauss-Legendre panel doubling did not converge to {abs_tol:g} "
        f"within {max_doublings} doublings over [{a:.17g}, {b:.17g}]"
    )
