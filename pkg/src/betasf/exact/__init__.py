"""Exact rational arithmetic layer: scalars, polynomials, operators, series."""

from .diffop import DiffOperator, delta_z
from .poly import VARS, Poly, poly_k, poly_N, poly_pi, poly_X, poly_z
from .ratfn import RationalFn
from .scalars import (
    GaussianRational,
    I,
    PiPoly,
    Rational,
    content_of,
    falling_factorial,
    falling_factorial_coeffs,
)
from .series import (
    FormalSeries,
    asymptotic_series_from_cn,
    frobenius_series,
    op_apply_series,
)

__all__ = [
    "DiffOperator",
    "FormalSeries",
    "GaussianRational",
    "I",
    "PiPoly",
    "Poly",
    "Rational",
    "RationalFn",
    "VARS",
    "asymptotic_series_from_cn",
    "content_of",
    "delta_z",
    "falling_factorial",
    "falling_factorial_coeffs",
    "frobenius_series",
    "op_apply_series",
    "poly_N",
    "poly_X",
    "poly_k",
    "poly_pi",
    "poly_z",
]
