"""Small-k structure-function coefficients from asymptotic tail data.

The odd small-k coefficients of the structure function are exact images of
the non-oscillatory tail coefficients; the k^8 and k^10 moment coefficients
are palindromic polynomials in x = beta/2 up to a fixed prefactor.  This
module converts between the two, encodes the exact constraint system that
pins down the degree-8 palindromic factor of the k^10 coefficient, and
checks the unit-circle/interlacing structure of the factors' zeros.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from .errors import DomainError, SingularSystemError
from .exact.scalars import PiPoly
from .selberg.reference import K8_FACTOR, K10_FACTOR
from .series_analysis import AsymptoticExpansion

__all__ = [
    "PalindromicPoly",
    "SmallKExpansion",
    "UnitCircleReport",
    "arguments_interlace",
    "closed_form_S",
    "k8_coefficient",
    "k10_constraints",
    "small_k_from_cn",
    "solve_k10",
    "tail_coefficient_from_moment",
    "zeros_on_unit_circle",
]


@dataclass(frozen=True)
class SmallKExpansion:
    """Odd singular coefficients: S(k; beta) = sum_p alpha_p |k|^p + even part."""

    beta: Fraction
    terms: tuple[tuple[int, PiPoly], ...]

    def alpha(self, p: int) -> PiPoly:
        for q, value in self.terms:
            if q == p:
                return value
        raise KeyError(f"coefficient of |k|^{p} not determined")


def small_k_from_cn(c: AsymptoticExpansion, beta) -> SmallKExpansion:
    """Map tail coefficients to alpha_(2n-1) = pi (-1)^n c_n / (2n-1)!."""
    terms = []
    for n, cn in enumerate(c.c, start=1):
        scale = PiPoly.monomial(Fraction((-1) ** n, factorial(2 * n - 1)), 1)
        terms.append((2 * n - 1, scale * cn))
    return SmallKExpansion(Fraction(beta), tuple(terms))


def tail_coefficient_from_moment(value: PiPoly, beta, n: int) -> PiPoly:
    """Invert the small-k map at one order.

    Given value = [k^(2n-2)] of beta*pi*S(k;beta)/|k|, return the tail
    coefficient c_n = (-1)^n (2n-1)! value / (beta pi^2).
    """
    scale = PiPoly.monomial(
        Fraction((-1) ** n * factorial(2 * n - 1), 1) / Fraction(beta), -2
    )
    return scale * value


@dataclass(frozen=True)
class PalindromicPoly:
    """Moment coefficient (2 pi x)^(-k_power) (x-1)^2 sum_l b[l] x^l.

    b must be palindromic of degree k_power - 2; x = beta/2.
    """

    b: tuple[Fraction, ...]
    k_power: int

    def __post_init__(self):
        b = tuple(Fraction(v) for v in self.b)
        object.__setattr__(self, "b", b)
        if len(b) != self.k_power - 1:
            raise DomainError(
                f"expected degree {self.k_power - 2} factor for k^{self.k_power}"
            )
        if b != b[::-1]:
            raise DomainError("factor is not palindromic")

    def factor_value(self, x) -> Fraction:
        x = Fraction(x)
        return sum((c * x**l for l, c in enumerate(self.b)), Fraction(0))

    def full_value(self, x) -> PiPoly:
        x = Fraction(x)
        if x == 0:
            raise DomainError("pole at x = 0")
        rational = (
            (x - 1) ** 2 * self.factor_value(x) / (2 * x) ** self.k_power
        )
        return PiPoly.monomial(rational, -self.k_power)

    def tail_coefficient(self, beta) -> PiPoly:
        """c_n of the matching non-oscillatory tail, n = k_power/2 + 1."""
        x = Fraction(beta) / 2
        return tail_coefficient_from_moment(
            self.full_value(x), beta, self.k_power // 2 + 1
        )


def k8_coefficient(x) -> PiPoly:
    """Exact [k^8] of beta*pi*S(k;beta)/|k| at x = beta/2."""
    return PalindromicPoly(K8_FACTOR, 8).full_value(x)


def _solve_exact(rows, rhs):
    """Gaussian elimination over Fraction with partial pivoting."""
    n = len(rows)
    aug = [[Fraction(v) for v in row] + [Fraction(r)] for row, r in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularSystemError(f"no pivot in column {col}")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        for r in range(col + 1, n):
            f = aug[r][col] / aug[col][col]
            if f:
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    out = [Fraction(0)] * n
    for col in range(n - 1, -1, -1):
        acc = aug[col][n] - sum(
            (aug[col][k] * out[k] for k in range(col + 1, n)), Fraction(0)
        )
        out[col] = acc / aug[col][col]
    return out


def _alternating_harmonic_sum() -> Fraction:
    return sum(
        (Fraction(1, q) * (1 - Fraction(2) ** (q - 11)) for q in range(1, 12)),
        Fraction(0),
    )


def k10_constraints(b1: Fraction):
    """Rows and right-hand sides of the 3x3 system for b2, b3, b4.

    The three constraints are the x = 1/2 evaluation of the palindromic sum,
    a weighted evaluation from the beta-derivative at x = 2, and the x = 3
    evaluation; b0 = 1 and b1 enter the right-hand sides.
    """
    b0 = Fraction(1)

    def pair(l):  # weight of b_l with its palindromic mirror at x = 1/2
        return Fraction(2) ** -l + Fraction(2) ** (l - 8)

    row_half = [pair(2), pair(3), Fraction(2) ** -4]
    rhs_half = Fraction(1, 5) - b0 * pair(0) - b1 * pair(1)

    def wq(m):
        return Fraction(2) ** m * (1 + Fraction(m - 11, 4))

    def wpair(l):  # weight wq(l) plus its palindromic mirror wq(8-l)
        return wq(l) + wq(8 - l)

    row_quad = [wpair(2), wpair(3), wq(4)]
    rhs_quad = (
        Fraction(1949, 275251200) * Fraction(4) ** 11 - b0 * wpair(0) - b1 * wpair(1)
    )

    def tpair(l):
        return Fraction(3) ** l + Fraction(3) ** (8 - l)

    row_three = [tpair(2), tpair(3), Fraction(3) ** 4]
    rhs_three = (
        Fraction(681505, 729) * Fraction(6) ** 11 / (factorial(11) * 4)
        - b0 * tpair(0)
        - b1 * tpair(1)
    )

    return (
        [row_half, row_quad, row_three],
        [rhs_half, rhs_quad, rhs_three],
    )


def solve_k10() -> PalindromicPoly:
    """Solve for the degree-8 palindromic factor of the k^10 coefficient.

    b0 = 1 and b1 come from the exact beta = 0 expansion; b2, b3, b4 solve
    the exact 3x3 constraint system.
    """
    b0 = Fraction(1)
    b1 = 2 - 2 * _alternating_harmonic_sum()
    rows, rhs = k10_constraints(b1)
    b2, b3, b4 = _solve_exact(rows, rhs)
    return PalindromicPoly((b0, b1, b2, b3, b4, b3, b2, b1, b0), 10)


def closed_form_S(beta: int, k: float) -> float:
    """Closed-form structure function for beta in {2, 4} (even in k)."""
    t = abs(float(k))
    if beta == 2:
        return t / (2 * math.pi) if t < 2 * math.pi else 1.0
    if beta == 4:
        if t == 0:
            return 0.0
        if t > 4 * math.pi:
            return 1.0
        u = 1 - t / (2 * math.pi)
        if u == 0:
            return math.inf
        return t / (4 * math.pi) - (t / (8 * math.pi)) * math.log(abs(u))
    raise DomainError(f"no closed form for beta={beta}")


@dataclass(frozen=True)
class UnitCircleReport:
    """Numeric zeros of a palindromic factor and their circle deviation."""

    roots: tuple[complex, ...]
    max_modulus_deviation: float

    @property
    def on_unit_circle(self) -> bool:
        return self.max_modulus_deviation < 1e-8

    def upper_half_arguments(self) -> tuple[float, ...]:
        return tuple(
            sorted(cmath.phase(r) for r in self.roots if r.imag > 0)
        )


def zeros_on_unit_circle(coeffs) -> UnitCircleReport:
    """Locate all zeros of sum coeffs[l] x^l numerically and report moduli."""
    desc = [float(c) for c in reversed(list(coeffs))]
    roots = np.roots(desc)
    deviation = float(max(abs(abs(r) - 1.0) for r in roots))
    return UnitCircleReport(tuple(complex(r) for r in roots), deviation)


def arguments_interlace(inner, outer) -> bool:
    """True when inner's sorted values separate consecutive outer values."""
    inner, outer = sorted(inner), sorted(outer)
    if len(outer) != len(inner) + 1:
        raise DomainError("interlacing needs lengths m and m+1")
    return all(
        outer[i] < inner[i] < outer[i + 1] for i in range(len(inner))
    )
