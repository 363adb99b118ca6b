"""Integration kernels: adaptive Simpson, paired tangent integral, Gauss-Legendre."""

import math

import pytest
from scipy.integrate import quad

from gcspiral.errors import DomainError, QuadratureError
from gcspiral.quadrature import (
    adaptive_simpson,
    adaptive_tangent_integral,
    gauss_legendre,
    gauss_legendre_adaptive,
)

# Independently computed with 40-digit arithmetic.
COS_T2_01 = 0.90452423790027208147
SIN_T2_01 = 0.31026830172338110181


class TestAdaptiveSimpson:
    def test_smooth_integral(self):
        assert adaptive_simpson(math.cos, 0.0, 2.0, 1e-12) == pytest.approx(
            math.sin(2.0), abs=1e-12
        )

    def test_oscillatory_cosine_of_square(self):
        value = adaptive_simpson(lambda t: math.cos(t * t), 0.0, 1.0, 1e-13)
        assert value == pytest.approx(COS_T2_01, abs=1e-12)

    def test_many_period_oscillation_with_phase_hint(self):
        value = adaptive_simpson(
            lambda t: math.cos(10.0 * t), 0.0, 20.0, 1e-11, phase=lambda t: 10.0 * t
        )
        assert value == pytest.approx(math.sin(200.0) / 10.0, abs=1e-10)

    def test_empty_interval(self):
        assert adaptive_simpson(math.cos, 1.0, 1.0, 1e-10) == 0.0

    def test_agrees_with_library_quadrature(self):
        f = lambda t: math.exp(-t) * math.sin(3.0 * t)
        oracle, _ = quad(f, 0.0, 5.0, epsabs=1e-13)
        assert adaptive_simpson(f, 0.0, 5.0, 1e-12) == pytest.approx(oracle, abs=1e-11)

    def test_exhaustion_reports_worst_interval(self):
        with pytest.raises(QuadratureError) as exc_info:
            adaptive_simpson(lambda t: math.cos(5.0 * t), 0.0, 10.0, 1e-14, max_subdivisions=1)
        assert "worst sub-interval" in str(exc_info.value)

    def test_invalid_bounds_rejected(self):
        with pytest.raises(DomainError):
            adaptive_simpson(math.cos, 1.0, 0.0, 1e-10)
        with pytest.raises(DomainError):
            adaptive_simpson(math.cos, 0.0, math.inf, 1e-10)

    def test_invalid_tolerance_rejected(self):
        with pytest.raises(DomainError):
            adaptive_simpson(math.cos, 0.0, 1.0, 0.0)
        with pytest.raises(DomainError):
            adaptive_simpson(math.cos, 0.0, 1.0, 1e-10, max_subdivisions=0)


class TestTangentIntegral:
    def test_matches_scalar_routine(self):
        theta = lambda t: 2.0 * t * t / math.pi
        dx, dy = adaptive_tangent_integral(theta, 0.0, math.pi, 1e-12)
        sx = adaptive_simpson(lambda t: math.cos(theta(t)), 0.0, math.pi, 1e-12, phase=theta)
        sy = adaptive_simpson(lambda t: math.sin(theta(t)), 0.0, math.pi, 1e-12, phase=theta)
        assert dx == pytest.approx(sx, abs=1e-11)
        assert dy == pytest.approx(sy, abs=1e-11)

    def test_unit_circle_multiple_turns(self):
        # theta spans 20*pi; the phase safeguard must force enough splits.
        dx, dy = adaptive_tangent_integral(lambda t: t, 0.0, 20.0 * math.pi, 1e-10)
        assert dx == pytest.approx(0.0, abs=1e-9)
        assert dy == pytest.approx(0.0, abs=1e-9)

    def test_straight_segment_is_exact(self):
        dx, dy = adaptive_tangent_integral(lambda t: 0.0, 0.0, 1.0, 1e-10)
        assert dx == 1.0
        assert dy == 0.0

    def test_exhaustion_raises(self):
        with pytest.raises(QuadratureError):
            adaptive_tangent_integral(lambda t: 25.0 * t, 0.0, 10.0, 1e-10, max_subdivisions=2)


class TestGaussLegendre:
    def test_polynomial_exactness(self):
        assert gauss_legendre(lambda t: t**5, 0.0, 1.0, order=8) == pytest.approx(
            1.0 / 6.0, abs=1e-15
        )

    def test_composite_panels(self):
        value = gauss_legendre(math.cos, 0.0, 2.0, order=8, panels=4)
        assert value == pytest.approx(math.sin(2.0), abs=1e-13)

    def test_adaptive_doubling(self):
        value = gauss_legendre_adaptive(lambda t: math.cos(t * t), 0.0, 1.0, 1e-12)
        assert value == pytest.approx(COS_T2_01, abs=1e-11)
        value = gauss_legendre_adaptive(lambda t: math.sin(t * t), 0.0, 1.0, 1e-12)
        assert value == pytest.approx(SIN_T2_01, abs=1e-11)

    def test_non_convergence_raises(self):
        with pytest.raises(QuadratureError):
            gauss_legendre_adaptive(
                lambda t: math.cos(50.0 * t * t), 0.0, 10.0, 1e-14, order=2, max_doublings=2
            )

    def test_invalid_parameters_rejected(self):
        with pytest.raises(DomainError):
            gauss_legendre(math.cos, 0.0, 1.0, order=0)
        with pytest.raises(DomainError):
            gauss_legendre(math.cos, 0.0, 1.0, panels=0)
        with pytest.raises(DomainError):
            gauss_legendre_adaptive(math.cos, 0.0, 1.0, abs_tol=-1.0)


class TestSchemeIndependence:
    def test_two_families_agree_on_oscillatory_integrand(self):
        f = lambda t: math.cos(4.0 * t * t - t)
        a = adaptive_simpson(f, 0.0, 2.0, 1e-11, phase=lambda t: 4.0 * t * t - t)
        b = gauss_legendre_adaptive(f, 0.0, 2.0, 1e-11)
        assert a == pytest.approx(b, abs=1e-9)
