"""Floating-point layer: kernels, quadrature, identities, scaling limits."""

from .backend import BackendError, backend_name, get_backend
from .closed_forms import (
    apply_operator,
    goe_companion_derivatives,
    goe_residual_via_beta4,
    nv_residual,
    ode_residual,
    rho2_closed,
    rho2_derivatives,
    s2_closed,
    s4_closed,
    s4_derivatives,
    sinc_derivatives,
)
from .identities import (
    DerivativeIdentityReport,
    cov_phase,
    covariance_bruteforce,
    diff_identity_residual,
    h_phase,
    mean_form_factor,
    mff_bruteforce,
    moment_2p,
    moment_2p_hypergeometric,
    remark_tail_integral,
    reproducing_residual,
    sbar,
    sbar_bruteforce,
)
from .kernels import (
    Kernel,
    OrthoSystem,
    gue_kernel,
    gue_kernel_diag,
    hard_edge_kernel,
    hermite_functions,
    lue_kernel,
    lue_kernel_diag,
    soft_edge_kernel,
    weighted_laguerre1,
)
from .limits import (
    d1_error,
    d2_error,
    d3_error,
    exp_smallness_ratio,
    fit_loglog_slope,
    global_d1,
    global_d2,
    global_d3,
    hard_edge_error,
    ksoft2_residual,
    mff_bulk,
    mpa,
    mpa_counting_error,
    mpa_error,
    mpb,
    mpb_finite_n,
    plancherel_rotach_mff,
    q1_quadrature,
    q3,
    q4,
    q5_value,
    rho_soft,
    soft_cov_quadrature,
)
from .quadrature import (
    DEFAULT_POLICY,
    AccuracyPolicy,
    QuadResult,
    integrate,
    integrate_2d,
    integrate_semi_infinite,
)
from .sff import (
    CSV_COLUMNS,
    SffCurve,
    dip_slope,
    plateau_deviation,
    sff_curve,
    sff_curve_grid,
    write_csv,
)
from .special import (
    airy_ai,
    bessel_j0,
    bessel_j1,
    erf,
    gamma_half_ratio,
    hyp2f1_terminating,
    laguerre_exact,
    sine_integral,
    upper_gamma_regularized,
)

__all__ = [
    "AccuracyPolicy",
    "BackendError",
    "CSV_COLUMNS",
    "DEFAULT_POLICY",
    "DerivativeIdentityReport",
    "Kernel",
    "OrthoSystem",
    "QuadResult",
    "SffCurve",
    "airy_ai",
    "apply_operator",
    "backend_name",
    "bessel_j0",
    "bessel_j1",
    "cov_phase",
    "covariance_bruteforce",
    "d1_error",
    "d2_error",
    "d3_error",
    "diff_identity_residual",
    "dip_slope",
    "erf",
    "exp_smallness_ratio",
    "fit_loglog_slope",
    "gamma_half_ratio",
    "get_backend",
    "global_d1",
    "global_d2",
    "global_d3",
    "goe_companion_derivatives",
    "goe_residual_via_beta4",
    "gue_kernel",
    "gue_kernel_diag",
    "h_phase",
    "hard_edge_error",
    "hard_edge_kernel",
    "hermite_functions",
    "hyp2f1_terminating",
    "integrate",
    "integrate_2d",
    "integrate_semi_infinite",
    "ksoft2_residual",
    "laguerre_exact",
    "lue_kernel",
    "lue_kernel_diag",
    "mean_form_factor",
    "mff_bruteforce",
    "mff_bulk",
    "moment_2p",
    "moment_2p_hypergeometric",
    "mpa",
    "mpa_counting_error",
    "mpa_error",
    "mpb",
    "mpb_finite_n",
    "nv_residual",
    "ode_residual",
    "plancherel_rotach_mff",
    "plateau_deviation",
    "q1_quadrature",
    "q3",
    "q4",
    "q5_value",
    "remark_tail_integral",
    "reproducing_residual",
    "rho2_closed",
    "rho2_derivatives",
    "rho_soft",
    "s2_closed",
    "s4_closed",
    "s4_derivatives",
    "sbar",
    "sbar_bruteforce",
    "sff_curve",
    "sff_curve_grid",
    "sinc_derivatives",
    "sine_integral",
    "soft_cov_quadrature",
    "soft_edge_kernel",
    "upper_gamma_regularized",
    "weighted_laguerre1",
    "write_csv",
]
