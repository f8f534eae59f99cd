"""Frozen exact targets for the bulk two-point operators.

Everything here is reference data: operators for beta in {2, 4, 6} plus the
displayed slice of the beta = 8 one, the Fourier-side operator at beta = 4,
and the expansion tables (tail coefficients, small-X series, indicial
exponents, palindromic moment factors) that the derivation and series layers
are checked against.  All scalars are exact rationals; pi enters only through
its dedicated variable.
"""

from fractions import Fraction

from ..exact import DiffOperator, FormalSeries, Poly, frobenius_series
from ..exact.scalars import PiPoly

__all__ = [
    "BULK_OPERATOR_ORDER",
    "K8_FACTOR",
    "K10_FACTOR",
    "beta8_displayed_coefficients",
    "bulk_operator",
    "fourier_operator_beta4",
    "indicial_exponents",
    "oscillatory_decay",
    "small_x_series",
    "tail_coefficients_beta6",
    "tail_coefficients_beta8_known",
]

BULK_OPERATOR_ORDER = {2: 3, 4: 5, 6: 7, 8: 9}


def _xp(*terms) -> Poly:
    out = Poly.zero()
    for coeff, x_exp, pi_exp in terms:
        out = out + Poly.monomial(coeff, X=x_exp, pi=pi_exp)
    return out


def _kp(*terms) -> Poly:
    out = Poly.zero()
    for coeff, k_exp, pi_exp in terms:
        out = out + Poly.monomial(coeff, k=k_exp, pi=pi_exp)
    return out


def bulk_operator(beta: int) -> DiffOperator:
    """Exact bulk two-point operator in X for beta in {2, 4, 6}."""
    if beta == 2:
        coeffs = [
            _xp((-4, 0, 0)),
            _xp((4, 3, 2), (-2, 1, 0)),
            _xp((4, 2, 0)),
            _xp((1, 3, 0)),
        ]
    elif beta == 4:
        coeffs = [
            _xp((16, 0, 0), (-32, 2, 2)),
            _xp((64, 5, 4), (-48, 3, 2), (-16, 1, 0)),
            _xp((64, 4, 2), (-40, 2, 0)),
            _xp((20, 5, 2), (12, 3, 0)),
            _xp((10, 4, 0)),
            _xp((1, 5, 0)),
        ]
    elif beta == 6:
        coeffs = [
            _xp((-1008, 0, 0), (6336, 2, 2), (-6912, 4, 4)),
            _xp((2808, 1, 0), (144, 3, 2), (-17280, 5, 4), (20736, 7, 6)),
            _xp((2688, 2, 0), (-18144, 4, 2), (20736, 6, 4)),
            _xp((-3924, 3, 0), (4080, 5, 2), (7056, 7, 4)),
            _xp((-696, 4, 0), (4704, 6, 2)),
            _xp((700, 5, 0), (504, 7, 2)),
            _xp((168, 6, 0)),
            _xp((9, 7, 0)),
        ]
    else:
        raise KeyError(f"no full reference operator for beta={beta}")
    return DiffOperator("X", coeffs)


def beta8_displayed_coefficients() -> dict[int, Poly]:
    """Known coefficients of the beta = 8 operator: orders 9, 8, 7 and 0."""
    return {
        9: _xp((16, 9, 0)),
        8: _xp((480, 8, 0)),
        7: _xp((4056, 7, 0), (1920, 9, 2)),
        0: _xp((20000, 0, 0), (-259584, 2, 2), (688128, 4, 4), (-589824, 6, 6)),
    }


def fourier_operator_beta4() -> DiffOperator:
    """Operator in k annihilating the beta = 4 structure function."""
    coeffs = [
        Poly.zero(),
        Poly.zero(),
        _kp((-28, 2, 0), (320, 0, 2)),
        _kp((-52, 3, 0), (640, 1, 2)),
        _kp((-15, 4, 0), (236, 2, 2), (-320, 0, 4)),
        _kp((-1, 5, 0), (20, 3, 2), (-64, 1, 4)),
    ]
    return DiffOperator("k", coeffs)


def _pi(num, den: int, pi_exp: int) -> PiPoly:
    return PiPoly({pi_exp: Fraction(num, den)})


def tail_coefficients_beta6() -> tuple[PiPoly, ...]:
    """c_1..c_7 of the non-oscillatory large-X tail at beta = 6."""
    return (
        _pi(-1, 6, -2),
        _pi(1, 9, -4),
        _pi(-55, 162, -6),
        _pi(5215, 1944, -8),
        _pi(-17105, 432, -10),
        _pi(681505, 729, -12),
        _pi(-140887175, 4374, -14),
    )


def tail_coefficients_beta8_known() -> dict[int, PiPoly]:
    """The two known tail coefficients at beta = 8."""
    return {
        6: _pi(19405708245, 16777216, -12),
        7: _pi(-11022926679765, 268435456, -14),
    }


def small_x_series(beta) -> FormalSeries:
    """Leading small-X series of the bulk two-point function.

    Supports beta in {2, 4, 6} and the dual exponent 2/3 (pass
    beta=Fraction(2, 3)), whose series starts at X^(2/3).
    """
    beta = Fraction(beta)
    if beta == 2:
        exponent, coeffs = 2, [
            _pi(1, 3, 2),
            PiPoly.zero(),
            _pi(-2, 45, 4),
            PiPoly.zero(),
            _pi(1, 315, 6),
        ]
    elif beta == 4:
        exponent, coeffs = 4, [
            _pi(16, 135, 4),
            PiPoly.zero(),
            _pi(-128, 4725, 6),
        ]
    elif beta == 6:
        exponent, coeffs = 6, [
            PiPoly.one(),
            PiPoly.zero(),
            _pi(-18, 55, 2),
            PiPoly.zero(),
            _pi(144, 2695, 4),
            PiPoly.zero(),
            _pi(-3456, 595595, 6),
        ]
    elif beta == Fraction(2, 3):
        exponent, coeffs = Fraction(2, 3), [
            PiPoly.one(),
            PiPoly.zero(),
            _pi(-6, 5, 2),
            PiPoly.zero(),
            _pi(72, 175, 4),
            PiPoly.zero(),
            _pi(-144, 1925, 6),
        ]
    else:
        raise KeyError(f"no small-X reference series for beta={beta}")
    return frobenius_series("X", exponent, coeffs)


def indicial_exponents(beta: int) -> tuple[Fraction, ...]:
    """Indicial exponents at X = 0, repeated by multiplicity, ascending."""
    tables = {
        2: (-2, -1, 2),
        4: (-2, -2, -1, 1, 4),
        6: (Fraction(-7, 3), -2, -2, -1, Fraction(2, 3), 3, 6),
    }
    if beta not in tables:
        raise KeyError(f"no indicial reference for beta={beta}")
    return tuple(Fraction(r) for r in tables[beta])


def oscillatory_decay(beta: int) -> dict[int, Fraction]:
    """Algebraic decay exponent of the e^(2*pi*i*p*X) solution branch.

    Maps each harmonic p = 1..beta/2 to a with solutions ~ X^(-a); the decay
    follows the 4*p^2/beta law.
    """
    if beta not in BULK_OPERATOR_ORDER:
        raise KeyError(f"no oscillatory reference for beta={beta}")
    return {p: Fraction(4 * p * p, beta) for p in range(1, beta // 2 + 1)}


# Palindromic factors of the k^8 and k^10 moment coefficients, ascending in
# x = beta/2.  The full coefficient is (2*pi*x)^(-deg-2) * (x-1)^2 * factor.
K8_FACTOR = (
    Fraction(1),
    Fraction(-263, 84),
    Fraction(1697, 315),
    Fraction(-6337, 1008),
    Fraction(1697, 315),
    Fraction(-263, 84),
    Fraction(1),
)

K10_FACTOR = (
    Fraction(1),
    Fraction(-1523, 420),
    Fraction(2529, 350),
    Fraction(-256189, 25200),
    Fraction(142463, 12600),
    Fraction(-256189, 25200),
    Fraction(2529, 350),
    Fraction(-1523, 420),
    Fraction(1),
)
