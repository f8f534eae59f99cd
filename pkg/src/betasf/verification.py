"""Named verification suites over the numeric layer.

Each suite runs a fixed list of checks and reports one CheckResult per
check; a suite passes when every check does.  Interval targets (fitted
convergence slopes) are encoded as distance-to-center against a radius so
every check reduces to value <= tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import exp, pi

from .numerics import (
    DEFAULT_POLICY,
    AccuracyPolicy,
    cov_phase,
    covariance_bruteforce,
    d1_error,
    d2_error,
    d3_error,
    diff_identity_residual,
    exp_smallness_ratio,
    fit_loglog_slope,
    goe_residual_via_beta4,
    hard_edge_error,
    mean_form_factor,
    mff_bulk,
    moment_2p,
    moment_2p_hypergeometric,
    mpa_counting_error,
    nv_residual,
    ode_residual,
    plancherel_rotach_mff,
    q1_quadrature,
    q3,
    q4,
    q5_value,
    remark_tail_integral,
    reproducing_residual,
    rho2_closed,
    s2_closed,
    s4_closed,
    sbar,
    sbar_bruteforce,
    soft_cov_quadrature,
)

SUITES = ("identities", "limits", "ode-residuals")

_RATE_LADDER = (8, 16, 32, 64)


@dataclass(frozen=True)
class CheckResult:
    name: str
    value: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.value <= self.tolerance


def _slope_check(name: str, errors, ns, center: float, radius: float) -> CheckResult:
    slope = fit_loglog_slope(ns, errors)
    return CheckResult(f"{name} (slope {slope:+.3f})", abs(slope - center), radius)


def _identities_suite(policy: AccuracyPolicy) -> list:
    checks = []
    for n, k in ((2, 0.7), (5, 1.3), (10, 2.1)):
        value = abs(cov_phase(n, k, k, policy) - sbar(n, k, policy))
        checks.append(CheckResult(f"cov diagonal vs direct integral n={n} k={k}", value, 1e-8))
    for n, k in ((2, 0.9), (5, 1.7)):
        value = abs(sbar(n, k, policy) - sbar_bruteforce(n, k, policy))
        checks.append(CheckResult(f"direct integral vs double quadrature n={n} k={k}", value, 1e-7))
    for n, k1, k2 in ((2, 0.9, 1.7), (4, 1.5, -0.6)):
        value = abs(cov_phase(n, k1, k2, policy) - covariance_bruteforce(n, k1, k2, policy))
        checks.append(
            CheckResult(f"phase covariance vs double quadrature n={n} k=({k1},{k2})", value, 1e-7)
        )
    for k in (0.5, 1.5, 3.0):
        value = abs(sbar(1, k, policy) - (1.0 - exp(-k * k / 2.0)))
        checks.append(CheckResult(f"n=1 closed form at k={k}", value, 1e-9))
    for n, k in ((4, 1.2), (7, 2.0)):
        value = abs(remark_tail_integral(n, k, policy) - mean_form_factor(n, k))
        checks.append(CheckResult(f"tail integral vs form factor n={n} k={k}", value, 1e-7))
    moment_gap = max(
        abs(moment_2p(n, p) - moment_2p_hypergeometric(n, p))
        for n in (1, 3, 6)
        for p in (0, 2, 5)
    )
    checks.append(CheckResult("moment dual routes exactly equal", float(moment_gap), 0.0))
    points = [(0.3, 1.1), (1.9, -0.4), (2.5, 2.5)]
    checks.append(
        CheckResult(
            "kernel derivative identities n=6",
            diff_identity_residual(6, points).residual,
            1e-10,
        )
    )
    checks.append(
        CheckResult(
            "kernel reproducing property n=5",
            reproducing_residual(5, 0.8, -0.3, policy),
            1e-8,
        )
    )
    return checks


def _limits_suite(policy: AccuracyPolicy) -> list:
    checks = []
    ns = _RATE_LADDER
    checks.append(
        _slope_check(
            "mean density limit rate", [d1_error(n, 0.8) for n in ns], ns, -2.0, 0.3
        )
    )
    checks.append(
        _slope_check(
            "variance limit rate", [d2_error(n, 0.9, policy) for n in ns], ns, -2.0, 0.3
        )
    )
    checks.append(
        _slope_check(
            "covariance limit rate",
            [d3_error(n, 0.7, 1.1, policy) for n in ns],
            ns,
            -2.0,
            0.3,
        )
    )
    checks.append(
        _slope_check(
            "counting-statistic density rate",
            [mpa_counting_error(n, 0.5, policy) for n in ns],
            ns,
            -1.0,
            0.3,
        )
    )
    q5_gaps = [abs(q5_value(n, 1.0) - q3(1.0)) for n in (200, 400, 800)]
    ratio = max(q5_gaps[1] / q5_gaps[0], q5_gaps[2] / q5_gaps[1])
    checks.append(CheckResult("soft-edge moment approach monotone at gamma=1", ratio, 1.0))
    for g in (1.0, 2.0):
        value = abs(q1_quadrature(g, policy) - q3(g))
        checks.append(CheckResult(f"soft-edge mean closed form gamma={g}", value, 1e-7))
    for g1, g2 in ((1.0, 1.5), (2.0, 1.0)):
        value = abs(soft_cov_quadrature(g1, g2, policy) - q4(g1, g2))
        checks.append(
            CheckResult(f"soft-edge covariance closed form gamma=({g1},{g2})", value, 1e-7)
        )
    hard_ratio = hard_edge_error(40, 2.3, 5.1) / hard_edge_error(20, 2.3, 5.1)
    checks.append(CheckResult("hard-edge error quartered when n doubles", hard_ratio, 0.35))
    def _pr_window_error(n: int) -> float:
        taus = [0.55 + 0.1 * j / 199 for j in range(200)]
        errs = [abs(mff_bulk(n, t) - plancherel_rotach_mff(n, t)) for t in taus]
        peak = max(abs(mff_bulk(n, t)) for t in taus)
        return max(errs) / peak

    e40, e160 = _pr_window_error(40), _pr_window_error(160)
    checks.append(
        CheckResult("oscillatory asymptotics relative error n=160", e160, 5e-3)
    )
    checks.append(
        CheckResult("oscillatory asymptotics improve with n", e160 / e40, 1.0)
    )
    checks.append(
        CheckResult("exponential smallness outside support", exp_smallness_ratio(), 1e-3)
    )
    return checks


def _ode_residuals_suite(policy: AccuracyPolicy) -> list:
    checks = []
    checks.append(
        CheckResult(
            "closed form value at half spacing",
            abs(rho2_closed(2, 0.5) - (1.0 - 4.0 / pi**2)),
            1e-15,
        )
    )
    for x in (0.3, 1.1, 2.7):
        checks.append(
            CheckResult(f"unitary closed form in bulk operator X={x}",
                        abs(ode_residual(2, x)), 1e-9)
        )
    for x in (0.4, 1.3):
        checks.append(
            CheckResult(f"symplectic closed form in bulk operator X={x}",
                        abs(ode_residual(4, x)), 1e-8)
        )
    for x in (0.4, 0.9, 1.6, 2.2, 3.0):
        checks.append(
            CheckResult(f"orthogonal companion in symplectic operator X={x}",
                        abs(goe_residual_via_beta4(x)), 1e-8)
        )
    for k in (0.5, 1.7, 3.0, 5.0, 5.9, 6.8, 7.5, 9.5, 11.0, 12.3):
        checks.append(
            CheckResult(f"structure function in Fourier operator k={k}",
                        abs(nv_residual(k)), 1e-7)
        )
    k = 1e-6
    checks.append(
        CheckResult("small-k duality slope beta=2",
                    abs(s2_closed(k) / k - 1.0 / (2.0 * pi)), 1e-8)
    )
    checks.append(
        CheckResult("small-k duality slope beta=4",
                    abs(s4_closed(k) / k - 1.0 / (4.0 * pi)), 1e-6)
    )
    return checks


_SUITE_RUNNERS = {
    "identities": _identities_suite,
    "limits": _limits_suite,
    "ode-residuals": _ode_residuals_suite,
}


def run_suite(name: str, policy: AccuracyPolicy = DEFAULT_POLICY) -> list:
    """All CheckResults for one named suite."""
    try:
        runner = _SUITE_RUNNERS[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES}") from None
    return runner(policy)


def suite_passed(results) -> bool:
    return all(r.passed for r in results)
