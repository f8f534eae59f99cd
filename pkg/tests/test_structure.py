"""Palindromic moment polynomials, unit-circle zeros, and closed forms."""

from fractions import Fraction
from math import inf, pi

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betasf.errors import DomainError
from betasf.exact import PiPoly
from betasf.selberg import (
    K8_FACTOR,
    K10_FACTOR,
    tail_coefficients_beta6,
    tail_coefficients_beta8_known,
)
from betasf.structure import (
    PalindromicPoly,
    arguments_interlace,
    closed_form_S,
    k8_coefficient,
    k10_constraints,
    small_k_from_cn,
    solve_k10,
    tail_coefficient_from_moment,
    zeros_on_unit_circle,
)


class TestPalindromicPoly:
    def test_mirror_validation(self):
        with pytest.raises(DomainError):
            PalindromicPoly((1, 2, 3, 2, 2, 2, 1), 8)

    def test_degree_validation(self):
        with pytest.raises(DomainError):
            PalindromicPoly((1, 2, 1), 8)

    def test_factor_value_symmetry(self):
        # b(x) = x^d b(1/x) for palindromic b
        poly = PalindromicPoly(K8_FACTOR, 8)
        x = Fraction(3, 2)
        d = len(poly.b) - 1
        assert poly.factor_value(x) == x**d * poly.factor_value(1 / x)

    @given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4),
                    min_size=4, max_size=4),
           st.fractions(min_value=1, max_value=3, max_denominator=5))
    @settings(max_examples=40, deadline=None)
    def test_palindromic_symmetry_property(self, half, x):
        b = tuple(half) + (Fraction(2),) + tuple(reversed(half))
        poly = PalindromicPoly(b, 10)
        d = len(b) - 1
        assert poly.factor_value(x) == x**d * poly.factor_value(1 / x)

    def test_full_value_vanishes_at_one(self):
        # the (x-1)^2 prefactor kills the beta = 2 moment
        assert PalindromicPoly(K8_FACTOR, 8).full_value(1) == PiPoly.zero()
        assert solve_k10().full_value(1) == PiPoly.zero()


class TestK8:
    def test_reference_coefficients(self):
        assert K8_FACTOR == (
            Fraction(1), Fraction(-263, 84), Fraction(1697, 315),
            Fraction(-6337, 1008), Fraction(1697, 315),
            Fraction(-263, 84), Fraction(1),
        )

    def test_beta6_tail_from_factor(self):
        # x = 3 recovers the fifth tail coefficient of the beta = 6 table
        got = PalindromicPoly(K8_FACTOR, 8).tail_coefficient(6)
        assert got == tail_coefficients_beta6()[4]

    def test_moment_map_inverts_small_k_map(self):
        value = k8_coefficient(Fraction(3))
        c5 = tail_coefficient_from_moment(value, 6, 5)
        assert c5 == tail_coefficients_beta6()[4]


class TestK10:
    def test_solver_matches_reference(self):
        assert solve_k10().b == K10_FACTOR

    def test_alternating_harmonic_route_agrees(self):
        # independent derivation of b1 overdetermines the linear system
        b1 = 2 - 2 * sum(
            Fraction(1, q) * (1 - Fraction(2) ** (q - 11))
            for q in range(1, 12)
        )
        assert solve_k10().b[1] == b1
        assert b1 == Fraction(-1523, 420)

    def test_constraint_system_shape(self):
        rows, rhs = k10_constraints(K10_FACTOR[1])
        assert len(rows) == 3
        assert all(len(r) == 3 for r in rows)
        assert len(rhs) == 3

    def test_beta8_tail_entry(self):
        got = solve_k10().tail_coefficient(8)
        assert got == tail_coefficients_beta8_known()[6]


class TestSmallKExpansion:
    def test_round_trip_through_moment(self):
        from betasf.selberg import bulk_operator
        from betasf.series_analysis import asymptotic_nonoscillatory

        expansion = asymptotic_nonoscillatory(bulk_operator(6), 5)
        small_k = small_k_from_cn(expansion, 6)
        for n in (1, 2, 3):
            alpha = small_k.alpha(2 * n - 1)
            back = tail_coefficient_from_moment(
                alpha * PiPoly.monomial(Fraction(6), 1), 6, n
            )
            assert back == expansion.c[n - 1]

    def test_missing_order_raises(self):
        from betasf.selberg import bulk_operator
        from betasf.series_analysis import asymptotic_nonoscillatory

        expansion = asymptotic_nonoscillatory(bulk_operator(2), 2)
        small_k = small_k_from_cn(expansion, 2)
        with pytest.raises(KeyError):
            small_k.alpha(2)


class TestUnitCircleZeros:
    def test_k8_zeros(self):
        report = zeros_on_unit_circle(K8_FACTOR)
        assert report.on_unit_circle
        assert report.max_modulus_deviation < 1e-8
        assert len(report.roots) == 6

    def test_k10_zeros(self):
        report = zeros_on_unit_circle(K10_FACTOR)
        assert report.on_unit_circle
        assert len(report.roots) == 8

    def test_interlacing(self):
        inner = zeros_on_unit_circle(K8_FACTOR).upper_half_arguments()
        outer = zeros_on_unit_circle(K10_FACTOR).upper_half_arguments()
        assert arguments_interlace(inner, outer)

    def test_interlace_requires_one_extra(self):
        with pytest.raises(DomainError):
            arguments_interlace((0.5, 1.0), (0.7,))


class TestClosedFormS:
    def test_beta2_ramp_and_plateau(self):
        assert closed_form_S(2, pi) == pytest.approx(0.5)
        assert closed_form_S(2, 9.0) == 1.0

    def test_beta4_diverges_at_singularity(self):
        assert closed_form_S(4, 2 * pi) == inf

    def test_beta4_zero_and_plateau(self):
        assert closed_form_S(4, 0.0) == 0.0
        assert closed_form_S(4, 14.0) == 1.0

    def test_even_in_k(self):
        assert closed_form_S(2, -1.3) == closed_form_S(2, 1.3)
        assert closed_form_S(4, -2.9) == closed_form_S(4, 2.9)

    def test_unsupported_beta_rejected(self):
        with pytest.raises(DomainError):
            closed_form_S(6, 1.0)
