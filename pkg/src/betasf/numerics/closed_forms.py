"""Closed-form bulk two-point functions and their ODE residuals.

The beta = 2 bulk correlation is elementary in the sine kernel; beta = 4 and
the beta = 1 companion add a sine-integral term.  All of them are annihilated
by the exact bulk operators, and this module supplies the analytically
differentiated closed forms so those annihilation claims can be checked in
floating point rather than taken on faith.  The Fourier side does the same
for the beta = 4 structure function.
"""

from __future__ import annotations

from math import comb, cos, factorial, inf, log, pi, sin

from ..errors import DomainError
from ..exact.diffop import DiffOperator
from ..selberg.reference import bulk_operator, fourier_operator_beta4
from .special import sine_integral

_SERIES_SWITCH = 0.5


def sinc_derivatives(s: float, order: int) -> list:
    """Derivatives of sin(s)/s at s, orders 0..order.

    Near the origin the term-differentiated power series is used; elsewhere
    the self-adjoint recurrence s f'' + 2 f' + s f = 0 steps upward from the
    elementary f and f'.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if abs(s) < _SERIES_SWITCH:
        out = []
        for j in range(order + 1):
            total = 0.0
            for n in range((j + 1) // 2, (j + 1) // 2 + 20):
                falling = 1
                for t in range(j):
                    falling *= 2 * n - t
                if falling == 0:
                    continue
                total += (-1.0) ** n * falling * s ** (2 * n - j) / factorial(2 * n + 1)
            out.append(total)
        return out
    values = [sin(s) / s]
    if order >= 1:
        values.append(cos(s) / s - sin(s) / (s * s))
    for m in range(order - 1):
        prev = values[m - 1] if m >= 1 else 0.0
        values.append(-((m + 2) * values[m + 1] + s * values[m] + m * prev) / s)
    return values


def _rho_derivatives_sine_integral(x: float, order: int, shift: float) -> list:
    """Derivatives of 1 - u^2 + u' (Si(2 pi x) + shift)/(2 pi), u = sinc(2 pi x).

    Closed under differentiation because (Si(2 pi x) + shift)' = 2 pi u; the
    order-m derivative needs sinc derivatives through order m + 1.
    """
    s = 2.0 * pi * x
    f = sinc_derivatives(s, order + 1)
    u = [(2.0 * pi) ** j * f[j] for j in range(order + 2)]
    c = sine_integral(s) + shift
    out = []
    for m in range(order + 1):
        usq = sum(comb(m, i) * u[i] * u[m - i] for i in range(m + 1))
        cross = u[1 + m] * c
        cross += sum(
            comb(m, i) * u[1 + i] * 2.0 * pi * u[m - 1 - i] for i in range(m)
        )
        base = 1.0 if m == 0 else 0.0
        out.append(base - usq + cross / (2.0 * pi))
    return out


def rho2_derivatives(beta: int, x: float, order: int) -> list:
    """Derivatives 0..order of the bulk two-point correlation at separation x."""
    if beta == 2:
        s = pi * x
        f = sinc_derivatives(s, order)
        u = [pi**j * f[j] for j in range(order + 1)]
        out = []
        for m in range(order + 1):
            usq = sum(comb(m, i) * u[i] * u[m - i] for i in range(m + 1))
            out.append((1.0 if m == 0 else 0.0) - usq)
        return out
    if beta == 4:
        return _rho_derivatives_sine_integral(x, order, 0.0)
    if beta == 1:
        if x <= 0.0:
            raise DomainError("beta = 1 closed form is defined for x > 0")
        half = [v / 2.0**j for j, v in enumerate(
            _rho_derivatives_sine_integral(x / 2.0, order, -pi / 2.0)
        )]
        return half
    raise DomainError("closed forms exist for beta in {1, 2, 4}")


def rho2_closed(beta: int, x: float) -> float:
    """Bulk two-point correlation closed form for beta in {1, 2, 4}."""
    return rho2_derivatives(beta, x, 0)[0]


def goe_companion_derivatives(x: float, order: int) -> list:
    """Derivatives of the beta = 1 companion R evaluated at argument x.

    R(x) = 1 - sinc(2 pi x)^2 + sinc'(2 pi x) (Si(2 pi x) - pi/2) / (2 pi);
    the bulk beta = 1 correlation at separation Y equals R(Y/2).
    """
    if x <= 0.0:
        raise DomainError("the companion form is defined for x > 0")
    return _rho_derivatives_sine_integral(x, order, -pi / 2.0)


def apply_operator(op: DiffOperator, x: float, derivs) -> float:
    """Evaluate sum_j c_j(x) derivs[j] for an operator with numeric-ready coefficients."""
    if op.order >= len(derivs):
        raise ValueError("not enough derivatives supplied for the operator order")
    allowed = {op.var, "pi"}
    total = 0.0
    for j, coeff in enumerate(op.coeffs):
        extra = set(coeff.variables()) - allowed
        if extra:
            raise ValueError(f"operator coefficient depends on {sorted(extra)}")
        value = coeff.evalf(**{op.var: x, "pi": pi})
        total += value.real * derivs[j]
    return total


def ode_residual(beta: int, x: float) -> float:
    """Residual of the exact bulk operator applied to the closed form at x."""
    if beta not in (2, 4):
        raise DomainError("ode_residual covers the even closed forms beta in {2, 4}")
    op = bulk_operator(beta)
    derivs = rho2_derivatives(beta, x, op.order)
    return apply_operator(op, x, derivs)


def goe_residual_via_beta4(x: float) -> float:
    """Residual of the beta = 4 bulk operator on the beta = 1 companion R.

    R differs from the beta = 4 closed form by a multiple of an elementary
    solution of the same fifth-order equation, so it is annihilated too.
    """
    op = bulk_operator(4)
    derivs = goe_companion_derivatives(x, op.order)
    return apply_operator(op, x, derivs)


# -- Fourier side -----------------------------------------------------------


def s2_closed(k: float) -> float:
    """beta = 2 structure function: k/(2 pi) up to the kink, then 1."""
    if k < 0.0:
        raise DomainError("structure functions are defined for k >= 0")
    return k / (2.0 * pi) if k < 2.0 * pi else 1.0


def s4_closed(k: float) -> float:
    """beta = 4 structure function on [0, 4 pi], then 1.

    S(k) = k/(4 pi) - (k/(8 pi)) log|1 - k/(2 pi)|; the logarithmic
    singularity at k = 2 pi is integrable but the value there diverges.
    """
    if k < 0.0:
        raise DomainError("structure functions are defined for k >= 0")
    if k > 4.0 * pi:
        return 1.0
    if k == 2.0 * pi:
        return inf
    u = 1.0 - k / (2.0 * pi)
    return k / (4.0 * pi) - (k / (8.0 * pi)) * log(abs(u))


def s4_derivatives(k: float, order: int) -> list:
    """Derivatives 0..order of the beta = 4 structure function, k != 2 pi.

    For j >= 2 the derivatives are rational in u = 1 - k/(2 pi):
    S^(j) = a_j u^(1-j) + b_j k u^(-j) with a_2 = 1/(8 pi^2),
    b_2 = 1/(32 pi^3), a_{j+1} = a_j (j-1)/(2 pi) + b_j,
    b_{j+1} = j b_j/(2 pi); valid on both sides of the singularity.
    """
    if k <= 0.0 or k >= 4.0 * pi or k == 2.0 * pi:
        raise DomainError("s4_derivatives needs k in (0, 4 pi) away from 2 pi")
    u = 1.0 - k / (2.0 * pi)
    log_abs_u = log(abs(u))
    out = [s4_closed(k)]
    if order >= 1:
        out.append(1.0 / (4.0 * pi) - log_abs_u / (8.0 * pi) + k / (16.0 * pi**2 * u))
    a, b = 1.0 / (8.0 * pi**2), 1.0 / (32.0 * pi**3)
    for j in range(2, order + 1):
        out.append(a * u ** (1 - j) + b * k * u ** (-j))
        a, b = a * (j - 1) / (2.0 * pi) + b, j * b / (2.0 * pi)
    return out[: order + 1]


def nv_residual(k: float) -> float:
    """Residual of the Fourier-side beta = 4 operator on the closed form."""
    op = fourier_operator_beta4()
    derivs = s4_derivatives(k, op.order)
    return apply_operator(op, k, derivs)
