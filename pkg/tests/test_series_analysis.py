"""Indicial roots, Frobenius branches, and asymptotic tails of the bulk ODEs."""

from fractions import Fraction

import pytest

from betasf.errors import DomainError, ResonanceError
from betasf.exact import op_apply_series
from betasf.selberg import (
    indicial_exponents,
    oscillatory_decay,
    small_x_series,
    tail_coefficients_beta6,
    tail_coefficients_beta8_known,
)
from betasf.series_analysis import (
    asymptotic_nonoscillatory,
    frobenius,
    indicial_roots,
    oscillatory_exponents,
)


class TestIndicialRoots:
    def test_root_sets_match_references(self, bulk_operators):
        for beta in (2, 4, 6):
            data = indicial_roots(bulk_operators[beta])
            assert tuple(sorted(data.roots)) == indicial_exponents(beta)

    def test_beta6_has_double_root(self, bulk_operators):
        data = indicial_roots(bulk_operators[6])
        assert data.multiplicity(Fraction(-2)) == 2

    def test_fractional_roots_for_beta6(self, bulk_operators):
        roots = indicial_roots(bulk_operators[6]).roots
        assert Fraction(2, 3) in roots
        assert Fraction(-7, 3) in roots


class TestFrobenius:
    @pytest.mark.parametrize("beta,rho", [(2, 2), (4, 4), (6, 6)])
    def test_density_branch_matches_reference(self, bulk_operators, beta, rho):
        ref = small_x_series(beta)
        got = frobenius(bulk_operators[beta], Fraction(rho), ref.order)
        assert got.scaled(ref.coeffs[0]) == ref

    def test_dual_branch_in_beta6_operator(self, bulk_operators):
        ref = small_x_series(Fraction(2, 3))
        got = frobenius(bulk_operators[6], Fraction(2, 3), ref.order)
        assert got.scaled(ref.coeffs[0]) == ref

    def test_series_is_annihilated_to_displayed_order(self, bulk_operators):
        op = bulk_operators[4]
        s = frobenius(op, Fraction(4), 8)
        residual = op_apply_series(op, s)
        for m in range(6):
            assert residual.coefficient(m).rational_part() == 0

    def test_resonant_root_rejected(self, bulk_operators):
        # -1 collides with the root 1 two steps up, with nonzero source
        with pytest.raises(ResonanceError):
            frobenius(bulk_operators[4], Fraction(-1), 6)

    def test_non_root_rejected(self, bulk_operators):
        with pytest.raises(DomainError):
            frobenius(bulk_operators[2], Fraction(5), 4)


class TestAsymptotics:
    def test_beta6_tail_table(self, bulk_operators):
        expansion = asymptotic_nonoscillatory(bulk_operators[6], 7)
        assert expansion.c == tail_coefficients_beta6()

    def test_beta8_known_tail_entries(self, bulk_operators):
        expansion = asymptotic_nonoscillatory(bulk_operators[8], 7)
        known = tail_coefficients_beta8_known()
        assert expansion.c[5] == known[6]
        assert expansion.c[6] == known[7]

    def test_leading_tail_term_is_universal(self, bulk_operators):
        # -1/(beta pi^2 X^2) leads every nonoscillatory tail
        for beta in (2, 4, 6, 8):
            expansion = asymptotic_nonoscillatory(bulk_operators[beta], 3)
            lead = expansion.c[0]
            assert lead.single() == (-2, Fraction(-1, beta))

    def test_oscillatory_decay_law(self, bulk_operators):
        for beta in (2, 4, 6, 8):
            got = {
                e.frequency: e.decay
                for e in oscillatory_exponents(bulk_operators[beta])
            }
            assert got == oscillatory_decay(beta)
