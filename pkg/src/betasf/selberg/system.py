"""Differential-difference system for Selberg-type moment integrals.

The family K_p(z), p = 0..n, satisfies a first-order differential-difference
recurrence whose matrix form is tridiagonal.  Eliminating K_1..K_n yields a
scalar linear ODE of order n+1 for K_0, the two-point-correlation generating
member.  The circular ensemble enters through a parameter specialization with
alpha = N - 2 kept symbolic in N.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DegenerateEliminationError, DomainError
from ..exact.diffop import DiffOperator, delta_z
from ..exact.poly import Poly, poly_z
from ..exact.ratfn import RationalFn

BETA_SOFT_CAP = 8


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly.const(Fraction(value))


@dataclass(frozen=True)
class SystemParams:
    """Parameters (n, lambda1, lambda2, kappa, alpha) of the recurrence."""

    n: int
    lambda1: Poly
    lambda2: Poly
    kappa: Fraction
    alpha: Poly

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")
        object.__setattr__(self, "lambda1", _as_poly(self.lambda1))
        object.__setattr__(self, "lambda2", _as_poly(self.lambda2))
        object.__setattr__(self, "kappa", Fraction(self.kappa))
        object.__setattr__(self, "alpha", _as_poly(self.alpha))


@dataclass(frozen=True)
class RecurrenceCoeffs:
    """Exact coefficient families A_p..E_p and their tilde transforms."""

    n: int
    A: tuple
    B: tuple
    D: tuple
    E: tuple
    Atilde: tuple
    Btilde: tuple
    prefactor_shift: Poly  # the constant s = n(alpha+1)/2 entering the tildes


@dataclass(frozen=True)
class TridiagonalSystem:
    """Matrix form z(1-z) v' = X v with X tridiagonal of dimension n+1."""

    n: int
    diag: tuple  # Atilde_p - z*Btilde_p, p = 0..n
    sup: tuple  # -(n-p)E_p, p = 0..n-1
    sub: tuple  # z*D_p, p = 1..n


def build_system(params: SystemParams) -> RecurrenceCoeffs:
    """Populate the six coefficient families as exact polynomials in N."""
    n = params.n
    l1, l2 = params.lambda1, params.lambda2
    kap, al = params.kappa, params.alpha
    one = Poly.one()
    A, B, D, E = [], [], [], []
    for p in range(n + 1):
        A.append((l1 + l2 + 2 * kap * (n - p - 1) + 2 * (al + one)) * (n - p))
        B.append((l1 + al + one + kap * (n - p - 1)) * (p - n))
        D.append((kap * (n - p) + al + one) * p)
        E.append(l1 + l2 + one + kap * (2 * n - p - 2) + (al + one))
    s = (al + one) * Fraction(n, 2)
    At = [A[p] + B[p] - s for p in range(n + 1)]
    Bt = [B[p] + p + s for p in range(n + 1)]
    return RecurrenceCoeffs(n, tuple(A), tuple(B), tuple(D), tuple(E),
                            tuple(At), tuple(Bt), s)


def tridiagonal_system(coeffs: RecurrenceCoeffs) -> TridiagonalSystem:
    n = coeffs.n
    z = poly_z()
    diag = tuple(coeffs.Atilde[p] - z * coeffs.Btilde[p] for p in range(n + 1))
    sup = tuple(-(n - p) * coeffs.E[p] for p in range(n))
    sub = tuple(z * coeffs.D[p] for p in range(1, n + 1))
    return TridiagonalSystem(n, diag, sup, sub)


def specialize_circular(beta: int) -> SystemParams:
    """Parameters for the circular ensemble: n = beta, alpha = N - 2."""
    if beta <= 0 or beta % 2 != 0:
        raise DomainError(f"beta must be a positive even integer, got {beta}")
    if beta > BETA_SOFT_CAP:
        warnings.warn(
            f"beta={beta} exceeds the tested range (<= {BETA_SOFT_CAP}); "
            "exact elimination cost grows quickly",
            RuntimeWarning,
            stacklevel=2,
        )
    lam = Fraction(2, beta) - 1
    alpha = Poly.var("N") - 2
    return SystemParams(beta, lam, lam, Fraction(2, beta), alpha)


class OperatorChain:
    """Operators L_p with K_p = L_p[K_0], stored as numerator/denominator.

    L_p = numerators[p] / scales[p]; the scale is the product of the
    elimination constants (n-q)E_q for q < p, a polynomial in N alone.
    """

    __slots__ = ("numerators", "scales")

    def __init__(self, numerators, scales):
        self.numerators = tuple(numerators)
        self.scales = tuple(scales)

    def __len__(self):
        return len(self.numerators)

    def coefficient(self, p: int, j: int) -> RationalFn:
        """Coefficient of d^j/dz^j in L_p as a reduced rational function."""
        return RationalFn(self.numerators[p].coefficient(j), self.scales[p])


@dataclass(frozen=True)
class EliminationResult:
    operator: DiffOperator  # normalized scalar operator of order n+1 in z
    chain: OperatorChain
    coeffs: RecurrenceCoeffs


def eliminate(params: SystemParams) -> EliminationResult:
    """Reduce the tridiagonal system to the scalar operator annihilating K_0.

    Backward substitution through the recurrence stays denominator-free:
    M_p = L_p * (product of (n-q)E_q for q < p) so every intermediate has
    polynomial coefficients, and the final operator needs no clearing.
    """
    n = params.n
    coeffs = build_system(params)
    for p in range(n):
        if ((n - p) * coeffs.E[p]).is_zero():
            raise DegenerateEliminationError(
                f"elimination constant (n-p)E_p vanishes identically at p={p}"
            )
    z = poly_z()
    dz = delta_z()

    def step(p: int, m_p: DiffOperator, m_prev: DiffOperator) -> DiffOperator:
        out = m_p * (coeffs.Atilde[p] - z * coeffs.Btilde[p]) - dz.compose(m_p)
        if p >= 1:
            scale_ratio = (n - p + 1) * coeffs.E[p - 1]
            out = out + m_prev * (z * coeffs.D[p] * scale_ratio)
        return out

    numerators = [DiffOperator.identity("z")]
    scales = [Poly.one()]
    prev = DiffOperator.zero("z")
    for p in range(n):
        nxt = step(p, numerators[p], prev)
        prev = numerators[p]
        numerators.append(nxt)
        scales.append(scales[p] * ((n - p) * coeffs.E[p]))
    raw = step(n, numerators[n], numerators[n - 1])
    op = raw.normalize()
    if op.order != n + 1:
        raise DegenerateEliminationError(
            f"scalar operator has order {op.order}, expected {n + 1}"
        )
    return EliminationResult(op, OperatorChain(numerators, scales), coeffs)
