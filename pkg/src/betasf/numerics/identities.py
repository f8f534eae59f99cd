"""Finite-n structure-function identities for the Gaussian unitary ensemble.

The mean form factor, the diagonal structure function, and the two-phase
covariance all reduce, for the Gaussian ensemble, to the parameter-0 Laguerre
kernel evaluated on squared half-variables.  This module implements those
reductions together with their direct brute-force counterparts (tensor
quadrature against the Hermite kernel), which serve as independent oracles:
the reductions are never trusted without the slow route agreeing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, sqrt

import numpy as np

from .kernels import (
    gue_kernel,
    gue_kernel_diag,
    hermite_functions,
    lue_kernel,
    lue_kernel_diag,
    weighted_laguerre1,
)
from .quadrature import DEFAULT_POLICY, AccuracyPolicy, integrate, integrate_2d, integrate_semi_infinite
from .special import gamma_half_ratio, hyp2f1_terminating

# Half-width of the support box for brute-force Gaussian-ensemble quadrature;
# the density decays like exp(-x^2) beyond sqrt(2n), so six units of margin
# leave a tail far below every tolerance used here.
_SUPPORT_MARGIN = 6.0

_COMPLEX_STEP = 1e-20


def _support(n: int) -> float:
    return sqrt(2.0 * n) + _SUPPORT_MARGIN


def mean_form_factor(n: int, k):
    """<sum_j e^{i k lambda_j}> for the n-point Gaussian unitary ensemble.

    Equals e^{-k^2/4} L_{n-1}^{(1)}(k^2/2); real for real k, and entire in k
    so complex arguments evaluate the analytic continuation.
    """
    k = np.asarray(k)
    out = weighted_laguerre1(n - 1, k * k / 2.0)
    return out


def moment_2p(n: int, p: int) -> Fraction:
    """Exact spectral moment <sum_j lambda_j^{2p}> via the binomial sum."""
    if p < 0 or n < 1:
        raise ValueError("moment_2p needs n >= 1 and p >= 0")
    total = 0
    for l in range(0, min(p, n - 1) + 1):
        total += comb(p, p - l) * comb(n, l + 1) * 2**l
    return gamma_half_ratio(p) * total


def moment_2p_hypergeometric(n: int, p: int) -> Fraction:
    """The same moment through the terminating-hypergeometric route."""
    if p < 0 or n < 1:
        raise ValueError("moment_2p_hypergeometric needs n >= 1 and p >= 0")
    return n * gamma_half_ratio(p) * hyp2f1_terminating(-p, 1 - n, Fraction(2), Fraction(2))


def h_phase(n: int, t1, t2):
    """H(t1, t2) = ((t1 + t2)/2) K_n^L(t1^2/2, t2^2/2) at Laguerre parameter 0."""
    t1 = np.asarray(t1)
    t2 = np.asarray(t2)
    return (t1 + t2) / 2.0 * lue_kernel(n, t1 * t1 / 2.0, t2 * t2 / 2.0)


def sbar(n: int, k: float, policy: AccuracyPolicy = DEFAULT_POLICY) -> float:
    """Diagonal structure function, integral of H(t, t) over t in [0, |k|]."""
    k = abs(float(k))
    if k == 0.0:
        return 0.0
    result = integrate(
        lambda t: t * lue_kernel_diag(n, t * t / 2.0), 0.0, k, policy
    )
    return float(result.value.real if np.iscomplexobj(result.value) else result.value)


def cov_phase(n: int, k1, k2, policy: AccuracyPolicy = DEFAULT_POLICY):
    """Cov(sum e^{i k1 lambda}, sum e^{-i k2 lambda}) for the Gaussian ensemble.

    Evaluated as the line integral of H(k1 - k2 + s, s) for s from 0 to k2;
    the integrand is entire in both phases, so complex k1, k2 follow by
    integrating along the straight segment.
    """
    k1 = complex(k1)
    k2 = complex(k2)
    if k2 == 0:
        return 0.0
    result = integrate(
        lambda u: k2 * h_phase(n, k1 - k2 + k2 * u, k2 * u), 0.0, 1.0, policy
    )
    value = result.value
    if k1.imag == 0.0 and k2.imag == 0.0:
        return float(value.real)
    return complex(value)


def remark_tail_integral(n: int, k1: float, policy: AccuracyPolicy = DEFAULT_POLICY) -> float:
    """Integral of H(k1 + s, s) over s in [0, infinity).

    The tail beyond T >= max(sqrt(128 n), 2 |k1|) is bounded through
    ell_m(x)^2 <= e^{-x/2} for x >= 64 m, giving
    |H(k1 + s, s)| <= n (|k1|/2 + s) e^{-s^2/8} and hence a closed tail bound
    n ((|k1|/2)(4/T) + 4) e^{-T^2/8}.
    """
    k1 = float(k1)
    floor = max(sqrt(128.0 * n), 2.0 * abs(k1), 20.0)

    def tail_bound(t: float) -> float:
        if t < floor:
            return float("inf")
        return n * ((abs(k1) / 2.0) * (4.0 / t) + 4.0) * np.exp(-t * t / 8.0)

    result = integrate_semi_infinite(
        lambda s: h_phase(n, k1 + s, s),
        0.0,
        tail_bound,
        policy,
        initial_cutoff=floor,
    )
    return float(np.real(result.value))


def mff_bruteforce(n: int, k, policy: AccuracyPolicy = DEFAULT_POLICY):
    """Mean form factor by direct quadrature of e^{i k x} against the density."""
    half = _support(n)
    result = integrate(
        lambda x: np.exp(1j * k * x) * gue_kernel_diag(n, x), -half, half, policy
    )
    return complex(result.value)


def sbar_bruteforce(n: int, k: float, policy: AccuracyPolicy = DEFAULT_POLICY) -> float:
    """Diagonal structure function as n minus the double phase integral."""
    half = _support(n)
    k = float(k)

    def f(x, y):
        return np.exp(1j * k * (x - y)) * gue_kernel(n, x, y, "sum") ** 2

    result = integrate_2d(f, -half, half, -half, half, policy)
    return float(n - result.value.real)


def covariance_bruteforce(n: int, k1, k2, policy: AccuracyPolicy = DEFAULT_POLICY):
    """Two-phase covariance by direct tensor quadrature over the kernel square."""
    half = _support(n)

    def f(x, y):
        phase = np.exp(1j * (k1 - k2) * x) - np.exp(1j * (k1 * x - k2 * y))
        return phase * gue_kernel(n, x, y, "sum") ** 2

    result = integrate_2d(f, -half, half, -half, half, policy)
    if complex(k1).imag == 0.0 and complex(k2).imag == 0.0:
        return float(result.value.real)
    return complex(result.value)


def reproducing_residual(n: int, x: float, y: float, policy: AccuracyPolicy = DEFAULT_POLICY) -> float:
    """|integral of K(x, t) K(t, y) dt - K(x, y)| for the Hermite kernel."""
    half = _support(n)
    result = integrate(
        lambda t: gue_kernel(n, x, t, "sum") * gue_kernel(n, t, y, "sum"),
        -half,
        half,
        policy,
    )
    return abs(float(result.value) - gue_kernel(n, x, y, "sum"))


@dataclass(frozen=True)
class DerivativeIdentityReport:
    """Largest residuals of the kernel derivative and symmetry identities."""

    pair_residual: float
    diagonal_residual: float
    symmetry_residual: float

    @property
    def residual(self) -> float:
        return max(self.pair_residual, self.diagonal_residual, self.symmetry_residual)


def diff_identity_residual(n: int, points) -> DerivativeIdentityReport:
    """Check the Hermite-kernel derivative identities at the given points.

    At every (x, y):  (d/dx + d/dy) K_n(x, y) must equal
    -sqrt(n/2) (h_n(x) h_{n-1}(y) + h_{n-1}(x) h_n(y)), and on the diagonal
    d/dl K_n(l, l) = -2 sqrt(n/2) h_n(l) h_{n-1}(l).  Derivatives are taken
    by complex step, exact to roundoff for these entire kernels.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("points must have shape (m, 2)")
    x, y = pts[:, 0], pts[:, 1]
    h = _COMPLEX_STEP
    coeff = sqrt(n / 2.0)

    dx = np.imag(gue_kernel(n, x + 1j * h, y, "sum")) / h
    dy = np.imag(gue_kernel(n, x, y + 1j * h, "sum")) / h
    hx_prev, hx = hermite_functions(n, x)
    hy_prev, hy = hermite_functions(n, y)
    pair_rhs = -coeff * (hx * hy_prev + hx_prev * hy)
    pair_res = float(np.max(np.abs(dx + dy - pair_rhs)))

    lam = np.concatenate([x, y])
    dl = np.imag(gue_kernel_diag(n, lam + 1j * h)) / h
    hl_prev, hl = hermite_functions(n, lam)
    diag_res = float(np.max(np.abs(dl + 2.0 * coeff * hl * hl_prev)))

    sym = np.abs(gue_kernel(n, x, y, "sum") - gue_kernel(n, y, x, "sum"))
    sym_cd = np.abs(gue_kernel(n, x, y, "cd") - gue_kernel(n, y, x, "cd"))
    sym_res = float(max(np.max(sym), np.max(sym_cd)))

    return DerivativeIdentityReport(pair_res, diag_res, sym_res)
