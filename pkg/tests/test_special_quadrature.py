"""Guarded special functions and the dual-scheme quadrature driver."""

from fractions import Fraction
from math import exp, pi, sqrt

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betasf.errors import DomainError, QuadratureError
from betasf.numerics.quadrature import (
    DEFAULT_POLICY,
    AccuracyPolicy,
    gauss_legendre,
    integrate,
    integrate_2d,
    integrate_semi_infinite,
    tanh_sinh,
)
from betasf.numerics.special import (
    airy_ai,
    bessel_j0,
    erf,
    gamma_half_ratio,
    hyp2f1_terminating,
    laguerre_exact,
    sine_integral,
    upper_gamma_regularized,
)


class TestSpecial:
    def test_bessel_j0_at_zero(self):
        assert bessel_j0(0.0) == 1.0

    def test_out_of_range_rejected(self):
        with pytest.raises(DomainError):
            bessel_j0(1e9)
        with pytest.raises(DomainError):
            sine_integral(float("nan"))

    def test_sine_integral_odd(self):
        assert sine_integral(-2.0) == -sine_integral(2.0)

    def test_airy_pair_satisfies_equation(self):
        # second derivative via finite difference of Ai'
        x = 0.7
        h = 1e-6
        _, dp = airy_ai(x + h)
        _, dm = airy_ai(x - h)
        ai, _ = airy_ai(x)
        assert (dp - dm) / (2 * h) == pytest.approx(x * ai, abs=1e-7)

    def test_erf_limits(self):
        assert erf(0.0) == 0.0
        assert erf(6.0) == pytest.approx(1.0, abs=1e-12)

    def test_upper_gamma_regularized_values(self):
        assert upper_gamma_regularized(1.0, 0.0) == 1.0
        assert upper_gamma_regularized(1.0, 2.0) == pytest.approx(exp(-2.0))
        with pytest.raises(DomainError):
            upper_gamma_regularized(-1.0, 2.0)

    @given(st.integers(0, 12))
    @settings(max_examples=30, deadline=None)
    def test_gamma_half_ratio_recurrence(self, p):
        # Gamma(z + 1) = z Gamma(z) at z = 1/2 + p
        assert gamma_half_ratio(p + 1) == gamma_half_ratio(p) * (
            Fraction(1, 2) + p
        )

    def test_terminating_hypergeometric_vandermonde(self):
        got = hyp2f1_terminating(-3, 5, Fraction(2), Fraction(1))
        assert got == _vandermonde(-3, 5, Fraction(2))

    def test_hypergeometric_rejects_nonterminating(self):
        with pytest.raises(DomainError):
            hyp2f1_terminating(2, 3, Fraction(5), Fraction(1, 2))

    def test_laguerre_exact_known_value(self):
        # L_2(x) = 1 - 2x + x^2/2
        x = Fraction(3, 4)
        assert laguerre_exact(2, 0, x) == 1 - 2 * x + x**2 / 2

    def test_laguerre_exact_parameter_shift(self):
        # L_n^{(a)}(0) = binom(n + a, n)
        assert laguerre_exact(4, 2, Fraction(0)) == Fraction(15)


def _vandermonde(a: int, b: int, c: Fraction) -> Fraction:
    """2F1(a, b; c; 1) = (c - b)_(-a) / (c)_(-a) for terminating a."""
    num = Fraction(1)
    den = Fraction(1)
    for m in range(-a):
        num *= c - b + m
        den *= c + m
    return num / den


class TestQuadrature:
    def test_polynomial_exactness(self):
        got = integrate(lambda t: t**3 - 2 * t, -1.0, 2.0, DEFAULT_POLICY)
        assert got.value == pytest.approx(15.0 / 4.0 - 3.0, abs=1e-13)

    def test_gaussian_integral(self):
        got = integrate(
            lambda t: np.exp(-(t**2)), -10.0, 10.0, DEFAULT_POLICY
        )
        assert got.value == pytest.approx(sqrt(pi), abs=1e-12)

    def test_tanh_sinh_handles_steep_edges(self):
        got = tanh_sinh(
            lambda t: np.exp(-40.0 * (1.0 - t)), 0.0, 1.0, DEFAULT_POLICY
        )
        assert got.value == pytest.approx((1.0 - exp(-40.0)) / 40.0, abs=1e-10)

    def test_schemes_cross_check(self):
        policy = AccuracyPolicy(abs_tol=1e-12, rel_tol=1e-12)
        f = lambda t: np.sin(3 * t) * np.exp(-t)
        a = gauss_legendre(f, 0.0, 2.0, policy).value
        b = tanh_sinh(f, 0.0, 2.0, policy).value
        assert a == pytest.approx(b, abs=1e-11)

    def test_divergent_integrand_raises(self):
        with pytest.raises(QuadratureError):
            integrate(
                lambda t: 1.0 / np.maximum(np.abs(t), 1e-300),
                0.0, 1.0, DEFAULT_POLICY,
            )

    def test_two_dimensional_product(self):
        got = integrate_2d(
            lambda x, y: x * y, 0.0, 1.0, 0.0, 2.0, DEFAULT_POLICY
        )
        assert got.value == pytest.approx(1.0, abs=1e-12)

    def test_semi_infinite_gaussian_tail(self):
        got = integrate_semi_infinite(
            lambda t: np.exp(-(t**2) / 2.0),
            0.0,
            lambda cutoff: exp(-(cutoff**2) / 2.0),
            DEFAULT_POLICY,
        )
        assert got.value == pytest.approx(sqrt(pi / 2.0), abs=1e-10)

    def test_policy_tolerance_resolution(self):
        policy = AccuracyPolicy(abs_tol=1e-6, rel_tol=1e-4)
        assert policy.tolerance(0.0) == 1e-6
        assert policy.tolerance(100.0) == pytest.approx(1e-2)
