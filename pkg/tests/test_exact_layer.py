"""Exact arithmetic layer: scalars, polynomials, operators, series, JSON."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betasf.exact import (
    VARS,
    DiffOperator,
    FormalSeries,
    GaussianRational,
    I,
    PiPoly,
    Poly,
    RationalFn,
    delta_z,
    falling_factorial,
    falling_factorial_coeffs,
    op_apply_series,
    poly_X,
    poly_pi,
    poly_z,
)
from betasf.exact.jsonform import (
    dumps_canonical,
    operator_from_data,
    operator_to_data,
    poly_from_data,
    poly_to_data,
    series_from_data,
    series_to_data,
)

rationals = st.fractions(
    min_value=-5, max_value=5, max_denominator=6
)


def small_polys(var_names=("X", "pi")):
    term = st.tuples(
        st.tuples(*(st.integers(0, 3) for _ in var_names)),
        rationals,
    )
    def build(terms):
        total = Poly.zero()
        for exps, c in terms:
            powers = dict(zip(var_names, exps))
            total = total + Poly.monomial(c, **powers)
        return total
    return st.lists(term, max_size=4).map(build)


class TestGaussianRational:
    def test_i_squares_to_minus_one(self):
        assert I * I == Fraction(-1)

    def test_division_roundtrip(self):
        z = GaussianRational(Fraction(3, 2), Fraction(-5, 7))
        w = GaussianRational(Fraction(1, 3), Fraction(2))
        assert (z / w) * w == z

    def test_conjugate_product_is_modulus_squared(self):
        z = GaussianRational(2, -3)
        assert z * z.conjugate() == Fraction(13)


class TestPoly:
    def test_monomial_and_degree(self):
        p = Poly.monomial(Fraction(3, 2), X=2, pi=1)
        assert p.degree("X") == 2
        assert p.degree("pi") == 1
        assert p.degree("z") == 0

    def test_unknown_variable_rejected(self):
        with pytest.raises(KeyError):
            Poly.var("w")

    def test_mul_matches_substituted_floats(self):
        p = poly_X(2) - 3 * poly_pi()
        q = poly_X() + 1
        lhs = (p * q).evalf(X=0.7, pi=3.1)
        rhs = p.evalf(X=0.7, pi=3.1) * q.evalf(X=0.7, pi=3.1)
        assert abs(lhs - rhs) < 1e-12

    def test_diff_product_rule(self):
        p = poly_X(3) + poly_pi() * poly_X()
        q = poly_X() - 2
        lhs = (p * q).diff("X")
        rhs = p.diff("X") * q + p * q.diff("X")
        assert lhs == rhs

    def test_evalf_requires_every_variable(self):
        p = poly_X() * poly_pi()
        with pytest.raises(ValueError):
            p.evalf(X=1.0)

    @given(small_polys(), small_polys(), small_polys())
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)

    @given(small_polys())
    @settings(max_examples=40, deadline=None)
    def test_additive_inverse(self, a):
        assert (a - a).is_zero()


class TestPiPoly:
    def test_laurent_arithmetic(self):
        p = PiPoly({2: Fraction(1, 3)})
        q = PiPoly({-2: Fraction(9)})
        assert p * q == PiPoly({0: Fraction(3)})

    def test_evalf(self):
        p = PiPoly({2: Fraction(1, 3)})
        assert abs(p.evalf(3.0) - 3.0) < 1e-15

    def test_division_by_rational(self):
        p = PiPoly({1: Fraction(5)})
        assert p / Fraction(5) == PiPoly({1: Fraction(1)})


class TestDiffOperator:
    def test_compose_is_operator_product(self):
        d = DiffOperator.derivative("X")
        x = DiffOperator.mul_by("X", poly_X())
        # [D, X] = 1
        commutator = d.compose(x) - x.compose(d)
        assert commutator == DiffOperator.identity("X")

    def test_apply_poly_leibniz(self):
        op = DiffOperator("X", [poly_X(), Poly.one(), poly_X(2)])
        p = poly_X(3) - 2 * poly_X()
        expected = (
            poly_X() * p + p.diff("X") + poly_X(2) * p.diff("X").diff("X")
        )
        assert op.apply_poly(p) == expected

    def test_normalize_strips_content_and_sign(self):
        op = DiffOperator("X", [6 * poly_X(), Poly.const(Fraction(-9, 2))])
        normalized = op.normalize()
        assert normalized == (-op).normalize()
        from math import gcd

        contents = [
            c.content() for c in normalized.coeffs if not c.is_zero()
        ]
        assert all(c.denominator == 1 for c in contents)
        joint = 0
        for c in contents:
            joint = gcd(joint, c.numerator)
        assert joint == 1

    def test_var_mismatch_rejected(self):
        with pytest.raises(ValueError):
            DiffOperator.derivative("X") + DiffOperator.derivative("k")

    def test_delta_z_on_monomial(self):
        # (z - z^2) d/dz sends z^m to m (z^m - z^(m+1))
        p = poly_z(4)
        assert delta_z().apply_poly(p) == 4 * (p - poly_z(5))


class TestRationalFn:
    def test_reduction_cancels_common_factor(self):
        num = poly_z(2) - 1
        den = poly_z() - 1
        f = RationalFn(num, den)
        assert f == RationalFn(poly_z() + 1, Poly.one())

    def test_sum_with_common_denominator(self):
        f = RationalFn(Poly.one(), poly_z())
        g = RationalFn(poly_z() - 1, poly_z())
        assert f + g == RationalFn.from_poly(Poly.one())


class TestFallingFactorial:
    @given(st.integers(0, 6), st.fractions(min_value=-4, max_value=4, max_denominator=3))
    @settings(max_examples=40, deadline=None)
    def test_coeffs_expand_to_value(self, j, s):
        coeffs = falling_factorial_coeffs(j)
        expanded = sum(c * s**t for t, c in enumerate(coeffs))
        assert expanded == falling_factorial(s, j)


class TestFormalSeries:
    def test_scaled_multiplies_every_coefficient(self):
        s = FormalSeries("frobenius", "X", 2, (PiPoly.one(), PiPoly({2: Fraction(1)})))
        scaled = s.scaled(PiPoly({1: Fraction(3)}))
        assert scaled.coeffs[0] == PiPoly({1: Fraction(3)})
        assert scaled.coeffs[1] == PiPoly({3: Fraction(3)})

    def test_operator_annihilates_its_own_frobenius_branch(self):
        # (X D - 2) annihilates X^2 exactly
        op = DiffOperator("X", [Poly.const(-2), poly_X()])
        s = FormalSeries("frobenius", "X", 2, (PiPoly.one(), PiPoly.zero()))
        assert op_apply_series(op, s).is_zero()


class TestJsonForm:
    def test_poly_roundtrip(self):
        p = poly_X(2) * poly_pi() - Fraction(7, 3) * poly_z()
        assert poly_from_data(poly_to_data(p)) == p

    def test_operator_roundtrip_with_gaussian_scalar(self):
        op = DiffOperator("z", [I * poly_z(), Poly.one()])
        assert operator_from_data(operator_to_data(op)) == op

    def test_series_roundtrip(self):
        s = FormalSeries(
            "asymptotic", "X", Fraction(-7, 3),
            (PiPoly.one(), PiPoly({-2: Fraction(-1, 6)})),
        )
        assert series_from_data(series_to_data(s)) == s

    def test_canonical_dump_is_stable(self):
        op = DiffOperator("X", [poly_X(), Poly.one()])
        a = dumps_canonical(operator_to_data(op))
        b = dumps_canonical(operator_to_data(op))
        assert a == b
        assert a.endswith("\n")

    def test_vars_tuple_is_pinned(self):
        assert VARS == ("X", "z", "k", "pi", "N")
