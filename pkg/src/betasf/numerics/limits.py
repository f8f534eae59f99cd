"""Scaling limits of the Gaussian-ensemble structure functions.

Three regimes, distinguished by how the phase k is tied to the matrix size n:

* global, k = tau / sqrt(2 n): Bessel-function limits for the mean form
  factor, the diagonal structure function, and the two-phase covariance;
* bulk, k = 2 sqrt(2 n) tau_b: the integrated-density (arcsine-type) limit,
  its two-sided deformation, and the oscillatory envelope of the mean form
  factor inside the spectrum with exponential smallness outside;
* soft edge, k along the imaginary direction scaled by sqrt(2) n^{1/6}:
  Airy-kernel limits with closed-form exponential moments.

Every limit function has a finite-n error companion so convergence rates can
be measured rather than assumed.
"""

from __future__ import annotations

from math import asin, cos, erf as _erf_scalar, exp, pi, sin, sqrt

import numpy as np

from ..errors import DomainError
from .identities import cov_phase, mean_form_factor, sbar
from .kernels import hard_edge_kernel, lue_kernel, soft_edge_kernel
from .quadrature import DEFAULT_POLICY, AccuracyPolicy, integrate, integrate_2d
from .special import airy_ai, bessel_j0, bessel_j1, erf, upper_gamma_regularized

_SOFT_WINDOW = (-20.0, 10.0)


def fit_loglog_slope(ns, errors) -> float:
    """Least-squares slope of log(error) against log(n)."""
    ns = np.asarray(ns, dtype=float)
    errors = np.asarray(errors, dtype=float)
    if ns.size < 2 or ns.size != errors.size:
        raise ValueError("need matching arrays with at least two points")
    if np.any(errors <= 0.0):
        raise ValueError("errors must be positive to fit a log-log slope")
    return float(np.polyfit(np.log(ns), np.log(errors), 1)[0])


# -- global regime ----------------------------------------------------------


def global_d1(tau: float) -> float:
    """Limit of the normalized mean form factor: 2 J_1(tau)/tau."""
    if tau == 0.0:
        return 1.0
    return 2.0 * bessel_j1(tau) / tau


def global_d2(tau: float) -> float:
    """Limit of the diagonal structure function under global scaling."""
    j0, j1 = bessel_j0(tau), bessel_j1(tau)
    return (tau * tau / 2.0) * (j0 * j0 + j1 * j1 - j0 * j1 / tau)


def global_d3(tau1: float, tau2: float) -> float:
    """Limit of the two-phase covariance; confluent at tau2 -> -tau1."""
    total = tau1 + tau2
    if abs(total) < 1e-9 * (abs(tau1) + abs(tau2) + 1.0):
        return global_d2(tau1)
    value = bessel_j0(tau1) * bessel_j1(tau2) + bessel_j1(tau1) * bessel_j0(tau2)
    return -tau1 * tau2 / (2.0 * total) * value


def d1_error(n: int, tau: float) -> float:
    return abs(float(mean_form_factor(n, tau / sqrt(2.0 * n))) / n - global_d1(tau))


def d2_error(n: int, tau: float, policy: AccuracyPolicy = DEFAULT_POLICY) -> float:
    return abs(sbar(n, tau / sqrt(2.0 * n), policy) - global_d2(tau))


def d3_error(
    n: int, tau1: float, tau2: float, policy: AccuracyPolicy = DEFAULT_POLICY
) -> float:
    scale = sqrt(2.0 * n)
    finite = cov_phase(n, tau1 / scale, -tau2 / scale, policy)
    return abs(float(np.real(finite)) - global_d3(tau1, tau2))


# -- bulk regime ------------------------------------------------------------


def mpa(tau_b: float) -> float:
    """Bulk limit of the normalized structure function (arcsine-type law)."""
    t = abs(tau_b)
    if t >= 1.0:
        return 1.0
    return (2.0 / pi) * (t * sqrt(1.0 - t * t) + asin(t))


def mpa_error(n: int, tau_b: float, policy: AccuracyPolicy = DEFAULT_POLICY) -> float:
    return abs(sbar(n, 2.0 * sqrt(2.0 * n) * tau_b, policy) / n - mpa(tau_b))


def mpa_counting_error(
    n: int, tau_b: float, policy: AccuracyPolicy = DEFAULT_POLICY
) -> float:
    """Counting-units error |S_n - n mpa| near tau_b, envelope over one period.

    The normalized pointwise error at an interior tau_b decays like an
    oscillatory n^{-2} (the smooth 1/n bulk correction vanishes for this
    ensemble), so the O(1/n) convergence statement lives in counting units.
    Sampling a window of about one local oscillation period and taking the
    maximum reads off the 1/n envelope without landing on a zero crossing.
    """
    t = abs(tau_b)
    if not 0.0 < t < 1.0:
        raise DomainError("mpa_counting_error needs 0 < tau_b < 1")
    period = 2.0 * pi / (4.0 * n * sqrt(1.0 - t * t))
    taus = np.linspace(t - 0.6 * period, t + 0.6 * period, 41)
    scale = 2.0 * sqrt(2.0 * n)
    return max(abs(sbar(n, scale * s, policy) - n * mpa(s)) for s in taus)


def mpb(tau_b: float, gamma: float, policy: AccuracyPolicy = DEFAULT_POLICY) -> float:
    """Two-sided bulk limit; reduces to the arcsine-type law at gamma = 0."""
    if gamma == 0.0:
        return mpa(tau_b)
    t = abs(tau_b)
    if t >= 1.0:
        return 1.0
    result = integrate(
        lambda s: np.sinh(gamma * np.sqrt(1.0 - s * s)), 0.0, t, policy
    )
    return 4.0 / (gamma * pi) * float(np.real(result.value))


def mpb_finite_n(
    n: int, tau_b: float, gamma: float, policy: AccuracyPolicy = DEFAULT_POLICY
) -> float:
    """Finite-n value converging to mpb, via complex phase displacement."""
    scale = 2.0 * sqrt(2.0 * n)
    shift = 1j * gamma / scale
    k1 = scale * tau_b + shift
    k2 = scale * tau_b - shift
    return float(np.real(cov_phase(n, k1, k2, policy))) / n


def plancherel_rotach_mff(n: int, tau_b: float) -> float:
    """Oscillatory asymptotic of the mean form factor inside the spectrum.

    Valid on 0 < tau_b < 1; the relative error is O(1/n) away from the
    endpoints but degrades as tau_b approaches either edge.
    """
    if not 0.0 < tau_b < 1.0:
        raise DomainError("plancherel_rotach_mff needs 0 < tau_b < 1")
    x = tau_b * tau_b
    phase = 2.0 * n * (sqrt(x * (1.0 - x)) + asin(sqrt(x))) - pi / 4.0
    envelope = 1.0 / (
        sqrt(4.0 * n * x) * sqrt(2.0 * pi * tau_b * sqrt(1.0 - x))
    )
    return envelope * sin(phase)


def mff_bulk(n: int, tau_b: float) -> float:
    """Mean form factor at the bulk phase k = 2 sqrt(2 n) tau_b."""
    return float(mean_form_factor(n, 2.0 * sqrt(2.0 * n) * tau_b))


def exp_smallness_ratio(
    n: int = 40, tau_outside: float = 1.2, tau_inside: float = 0.8
) -> float:
    """|mean form factor| outside the spectrum over its inside envelope.

    The envelope is taken as the largest |value| over a grid spanning about
    one and a half oscillation periods around tau_inside, which removes the
    risk of sampling near a zero of the oscillation.
    """
    period = 2.0 * pi / (4.0 * n * sqrt(1.0 - tau_inside * tau_inside))
    taus = np.linspace(tau_inside - 0.75 * period, tau_inside + 0.75 * period, 301)
    envelope = max(abs(mff_bulk(n, t)) for t in taus)
    return abs(mff_bulk(n, tau_outside)) / envelope


# -- soft edge --------------------------------------------------------------


def rho_soft(x):
    """Soft-edge density Ai'(x)^2 - x Ai(x)^2."""
    ai, aip = airy_ai(x)
    return aip * aip - np.asarray(x) * ai * ai


def q3(gamma: float) -> float:
    """Closed form of the soft-edge exponential linear statistic mean."""
    if gamma <= 0.0:
        raise DomainError("q3 needs gamma > 0")
    return exp(gamma**3 / 12.0) / (2.0 * sqrt(pi) * gamma**1.5)


def q4(gamma1: float, gamma2: float) -> float:
    """Closed form of the soft-edge exponential linear statistic covariance."""
    if gamma1 <= 0.0 or gamma2 <= 0.0:
        raise DomainError("q4 needs positive exponents")
    total = gamma1 + gamma2
    prefactor = exp(total**3 / 12.0) / (2.0 * sqrt(pi) * total**1.5)
    return prefactor * _erf_scalar(0.5 * sqrt(gamma1 * gamma2 * total))


def q1_quadrature(gamma: float, policy: AccuracyPolicy = DEFAULT_POLICY) -> float:
    """Integral of e^{gamma x} against the soft-edge density.

    The window [-20, 10] is integrated directly; the left tail uses the
    asymptotic density sqrt(-x)/pi, whose exponential moment is an upper
    incomplete gamma.  Accurate to about 1e-8 for gamma >= 1 (the neglected
    tail corrections scale like e^{20 gamma} in the denominator).
    """
    if gamma <= 0.0:
        raise DomainError("q1_quadrature needs gamma > 0")
    lo, hi = _SOFT_WINDOW
    body = integrate(lambda x: np.exp(gamma * x) * rho_soft(x), lo, hi, policy)
    tail = (
        (sqrt(pi) / 2.0)
        * upper_gamma_regularized(1.5, -lo * gamma)
        / (pi * gamma**1.5)
    )
    return float(np.real(body.value)) + tail


def soft_cov_quadrature(
    gamma1: float, gamma2: float, policy: AccuracyPolicy = DEFAULT_POLICY
) -> float:
    """Soft-edge covariance of two exponential linear statistics, by quadrature.

    Expanding the symmetrized square against the Airy kernel and using the
    reproducing property turns the slowly decaying oscillatory tails into the
    single-statistic integral, leaving one cross term whose integrand decays
    exponentially in both variables:

        Cov = q1(gamma1 + gamma2) - II e^{gamma1 x + gamma2 y} K(x, y)^2.

    Box truncation errors are O(e^{-20 gamma}), negligible for gamma >= 1.
    """
    if gamma1 <= 0.0 or gamma2 <= 0.0:
        raise DomainError("soft_cov_quadrature needs positive exponents")
    lo, hi = _SOFT_WINDOW

    def cross(x, y):
        return np.exp(gamma1 * x + gamma2 * y) * soft_edge_kernel(x, y) ** 2

    cross_term = integrate_2d(cross, lo, hi, lo, hi, policy)
    return q1_quadrature(gamma1 + gamma2, policy) - float(np.real(cross_term.value))


def q5_value(n: int, gamma: float) -> float:
    """Finite-n soft-edge mean via the Laguerre route, converging to q3."""
    if gamma <= 0.0:
        raise DomainError("q5_value needs gamma > 0")
    from .kernels import weighted_laguerre1

    x = -(gamma * gamma) * n ** (1.0 / 3.0)
    return exp(-2.0 * gamma * n ** (2.0 / 3.0)) * float(weighted_laguerre1(n - 1, x))


def ksoft2_residual(x: float, y: float, policy: AccuracyPolicy = DEFAULT_POLICY) -> float:
    """|Airy kernel minus its integral representation| at one point.

    The representation integrates Ai(x + t) Ai(y + t) over t >= 0; the
    integration stops where the arguments leave the guarded Airy window, so
    the residual floor is about e^{-(x + y + 2 T)} with T = 10 - max(x, y).
    Points with x + y >= 0 keep that floor below 1e-8.
    """
    cutoff = 10.0 - max(x, y)
    if cutoff <= 2.0:
        raise DomainError("ksoft2_residual needs arguments well below 8")

    def f(t):
        return airy_ai(x + t)[0] * airy_ai(y + t)[0]

    body = integrate(f, 0.0, cutoff, policy)
    return abs(float(np.real(body.value)) - soft_edge_kernel(x, y))


# -- hard edge --------------------------------------------------------------


def hard_edge_error(n: int, x: float, y: float) -> float:
    """|scaled Laguerre kernel minus the Bessel kernel| at one point."""
    scale = 4.0 * n
    finite = lue_kernel(n, x / scale, y / scale) / scale
    return abs(float(finite) - hard_edge_kernel(x, y))
