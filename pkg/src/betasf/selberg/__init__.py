"""Recurrence elimination and bulk scaling for circular-ensemble correlations."""

from .bulk import bulk_limit, fourier_side, parity_violations
from .reference import (
    BULK_OPERATOR_ORDER,
    K8_FACTOR,
    K10_FACTOR,
    beta8_displayed_coefficients,
    bulk_operator,
    fourier_operator_beta4,
    indicial_exponents,
    oscillatory_decay,
    small_x_series,
    tail_coefficients_beta6,
    tail_coefficients_beta8_known,
)
from .system import (
    EliminationResult,
    OperatorChain,
    RecurrenceCoeffs,
    SystemParams,
    TridiagonalSystem,
    build_system,
    eliminate,
    specialize_circular,
    tridiagonal_system,
)

__all__ = [
    "BULK_OPERATOR_ORDER",
    "EliminationResult",
    "K8_FACTOR",
    "K10_FACTOR",
    "OperatorChain",
    "RecurrenceCoeffs",
    "SystemParams",
    "TridiagonalSystem",
    "beta8_displayed_coefficients",
    "build_system",
    "bulk_limit",
    "bulk_operator",
    "eliminate",
    "fourier_operator_beta4",
    "fourier_side",
    "indicial_exponents",
    "oscillatory_decay",
    "parity_violations",
    "small_x_series",
    "specialize_circular",
    "tail_coefficients_beta6",
    "tail_coefficients_beta8_known",
    "tridiagonal_system",
]
