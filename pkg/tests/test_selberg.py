"""Elimination pipeline: finite-N systems, bulk limits, Fourier transfer."""

from fractions import Fraction

import pytest

from betasf.errors import (
    DegenerateEliminationError,
    DomainError,
    UnsupportedExpansionError,
)
from betasf.exact import Poly, RationalFn, poly_X
from betasf.selberg import (
    BULK_OPERATOR_ORDER,
    SystemParams,
    beta8_displayed_coefficients,
    build_system,
    bulk_limit,
    bulk_operator,
    eliminate,
    fourier_operator_beta4,
    fourier_side,
    parity_violations,
    specialize_circular,
    tridiagonal_system,
)


class TestSpecialization:
    def test_even_beta_gives_integer_band(self):
        for beta in (2, 4, 6, 8):
            params = specialize_circular(beta)
            assert params.n == beta
            assert params.kappa == Fraction(2, beta)

    def test_odd_beta_rejected(self):
        with pytest.raises(DomainError):
            specialize_circular(3)

    def test_beta_two_system_dimension(self):
        system = tridiagonal_system(build_system(specialize_circular(2)))
        assert system.n == 2
        assert len(system.diag) == 3
        assert len(system.sup) == 2
        assert len(system.sub) == 2

    def test_elimination_pivots_nonzero(self):
        params = specialize_circular(6)
        system = tridiagonal_system(build_system(params))
        for entry in system.sup:
            assert not entry.is_zero()


class TestElimination:
    def test_order_is_band_plus_one(self, finite_operators):
        for beta, op in finite_operators.items():
            assert op.order == beta + 1

    def test_chain_reproduces_top_row(self, finite_operators):
        result = eliminate(specialize_circular(4))
        chain = result.chain
        top = chain.coefficient(0, 0)
        assert top == RationalFn.from_poly(Poly.one())

    def test_operator_is_real(self, finite_operators):
        for op in finite_operators.values():
            assert op.is_real()

    def test_degenerate_superdiagonal_rejected(self):
        # alpha = -2 makes the p = 0 elimination constant vanish
        broken = SystemParams(1, 0, 0, Fraction(1), -2)
        with pytest.raises(DegenerateEliminationError):
            eliminate(broken)


class TestBulkLimit:
    def test_matches_reference_operators(self, bulk_operators):
        for beta in (2, 4, 6):
            assert bulk_operators[beta] == bulk_operator(beta)

    def test_orders_match_reference_table(self, bulk_operators):
        for beta, op in bulk_operators.items():
            assert op.order == BULK_OPERATOR_ORDER[beta]

    def test_beta8_displayed_terms(self, bulk_operators):
        op = bulk_operators[8]
        displayed = beta8_displayed_coefficients()
        for j, coeff in displayed.items():
            assert op.coefficient(j) == coeff

    def test_no_parity_violations(self, bulk_operators):
        for op in bulk_operators.values():
            assert parity_violations(op) == []

    def test_foreign_variable_rejected(self, finite_operators):
        op = finite_operators[2]
        polluted = op.__class__(
            "z", [poly_X() * op.coeffs[0]] + list(op.coeffs[1:])
        )
        with pytest.raises(UnsupportedExpansionError):
            bulk_limit(polluted)


class TestFourierSide:
    def test_beta4_matches_reference(self, bulk_operators):
        derived = fourier_side(bulk_operators[4]).normalize()
        assert derived == fourier_operator_beta4().normalize()

    def test_fourier_operator_order(self, bulk_operators):
        transferred = fourier_side(bulk_operators[4])
        assert transferred.order == fourier_operator_beta4().order

    def test_fourier_variable_is_k(self, bulk_operators):
        assert fourier_side(bulk_operators[2]).var == "k"
