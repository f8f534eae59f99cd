"""Correlation kernels and orthogonal systems of the Gaussian/Laguerre pair.

Front end over the backend-selected recurrence implementations, plus the two
scaled limit kernels (Bessel at the hard edge, Airy at the soft edge).  The
finite-n kernels come in two algebraically equal forms, the direct spectral
sum and the Christoffel-Darboux quotient; keeping both callable is what lets
the test suite check one against the other instead of trusting either.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, pi, sqrt
from numbers import Rational

import numpy as np

from ..errors import DomainError
from .backend import get_backend
from .special import airy_ai, bessel_j0, bessel_j1

# Relative offdiagonal distance below which the limit kernels switch to the
# confluent form at the midpoint; O(delta^2) error, well under the 1e-8
# tolerances used downstream.
_DIAG_SWITCH = 1e-6


def _dispatch(fname: str, n: int, *arrays):
    impl = get_backend()
    arrs = [np.asarray(a) for a in arrays]
    dtype = np.result_type(np.float64, *arrs)
    if len(arrs) > 1:
        arrs = list(np.broadcast_arrays(*arrs))
    shape = arrs[0].shape
    flat = [np.ascontiguousarray(a, dtype=dtype).ravel() for a in arrs]
    out = getattr(impl, fname)(n, *flat)
    if isinstance(out, tuple):
        return tuple(o.reshape(shape) if shape else o[0] for o in out)
    return out.reshape(shape) if shape else out[0]


def hermite_functions(n: int, x) -> tuple:
    """Orthonormal Hermite functions (h_{n-1}(x), h_n(x))."""
    return _dispatch("hermite_pair", n, x)


def gue_kernel_diag(n: int, x):
    """GUE kernel diagonal K_n(x, x) = sum of h_m(x)^2 over m < n."""
    return _dispatch("gue_diag", n, x)


def gue_kernel(n: int, x, y, form: str = "cd"):
    """GUE kernel K_n(x, y); `form` picks 'cd' or the direct 'sum'."""
    if form == "cd":
        return _dispatch("gue_cd", n, x, y)
    if form == "sum":
        return _dispatch("gue_sum", n, x, y)
    raise ValueError(f"unknown kernel form {form!r}")


def lue_kernel_diag(n: int, x, form: str = "cd"):
    """Parameter-0 Laguerre kernel diagonal K_n(x, x)."""
    if form == "cd":
        return _dispatch("lue_cd_diag", n, x)
    if form == "sum":
        return _dispatch("lue_diag", n, x)
    raise ValueError(f"unknown kernel form {form!r}")


def lue_kernel(n: int, x, y, form: str = "cd"):
    """Parameter-0 Laguerre kernel K_n(x, y); complex arguments supported."""
    if form == "cd":
        return _dispatch("lue_cd", n, x, y)
    if form == "sum":
        return _dispatch("lue_sum", n, x, y)
    raise ValueError(f"unknown kernel form {form!r}")


def weighted_laguerre1(n: int, x):
    """e^{-x/2} L_n^{(1)}(x); the mean form factor is this at x = k^2/2."""
    return _dispatch("laguerre_ell1", n, x)


@dataclass(frozen=True)
class OrthoSystem:
    """Monic orthogonal polynomials p_n with weight w, plus sqrt(w) p_n.

    family 'hermite_gue' carries weight e^{-x^2} on the line with
    (p_n, p_n) = sqrt(pi) n!/2^n; 'laguerre_lue' carries x^a e^{-x} on the
    half line with (p_n, p_n) = n! (n+a)!.  `monic` is exact on Rational
    input, which is what anchors the float recurrences for n <= 30.
    """

    family: str
    a: int = 0

    def __post_init__(self) -> None:
        if self.family not in ("hermite_gue", "laguerre_lue"):
            raise DomainError(f"unknown orthogonal family {self.family!r}")
        if self.a < 0:
            raise DomainError("Laguerre parameter must be nonnegative")

    def monic(self, n: int, x):
        """p_n(x) by the three-term recurrence; exact for Fraction x."""
        one = Fraction(1) if isinstance(x, Rational) else 1.0
        p_prev, p = 0 * one, one
        if self.family == "hermite_gue":
            for m in range(n):
                p_prev, p = p, x * p - Fraction(m, 2) * p_prev
        else:
            for m in range(n):
                p_prev, p = p, (x - (2 * m + 1 + self.a)) * p - m * (m + self.a) * p_prev
        return p

    def norm_rational(self, n: int) -> Fraction:
        """(p_n, p_n) with the sqrt(pi) factor of the Hermite case removed."""
        if self.family == "hermite_gue":
            return Fraction(factorial(n), 2**n)
        return Fraction(factorial(n) * factorial(n + self.a))

    @property
    def norm_carries_sqrt_pi(self) -> bool:
        return self.family == "hermite_gue"

    def norm(self, n: int) -> float:
        value = float(self.norm_rational(n))
        return value * sqrt(pi) if self.norm_carries_sqrt_pi else value

    def orthonormal(self, n: int, x: np.ndarray) -> np.ndarray:
        """phi_n(x) = sqrt(w(x)) p_n(x) / sqrt((p_n, p_n)), vectorized."""
        x = np.asarray(x, dtype=float)
        if self.family == "hermite_gue":
            return hermite_functions(n + 1, x)[0] if n >= 0 else np.zeros_like(x)
        g_prev = np.zeros_like(x)
        g = np.where(x >= 0, np.exp(-x / 2.0) * x ** (self.a / 2.0), np.nan)
        for m in range(n):
            g_prev, g = g, ((2 * m + 1 + self.a - x) * g - (m + self.a) * g_prev) / (
                m + 1
            )
        return g * sqrt(factorial(n) / factorial(n + self.a))

    def psi(self, n: int, x: np.ndarray) -> np.ndarray:
        """sqrt(w(x)) p_n(x); monic Laguerre alternates sign, (-1)^n n! L_n."""
        sign = 1.0 if self.family == "hermite_gue" else (-1.0) ** n
        return sign * self.orthonormal(n, x) * sqrt(self.norm(n))


def _confluent_quotient(num, dnum, delta, near):
    safe = np.where(near, 1.0, delta)
    return np.where(near, dnum, num / safe)


def hard_edge_kernel(x, y) -> np.ndarray:
    """Bessel kernel (parameter 0) in the squared-variable convention.

    K(X^2, Y^2) = (X J_1(X) J_0(Y) - Y J_1(Y) J_0(X)) / (2 (X^2 - Y^2)),
    diagonal (J_0(X)^2 + J_1(X)^2)/4.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.any(x < 0) or np.any(y < 0):
        raise DomainError("hard-edge kernel arguments must be nonnegative")
    x, y = np.broadcast_arrays(x, y)
    rx, ry = np.sqrt(x), np.sqrt(y)
    delta = x - y
    near = np.abs(delta) < _DIAG_SWITCH * (np.abs(x) + np.abs(y) + 1.0)
    num = (rx * bessel_j1(rx) * bessel_j0(ry) - ry * bessel_j1(ry) * bessel_j0(rx)) / 2.0
    rm = np.sqrt((x + y) / 2.0)
    diag = (bessel_j0(rm) ** 2 + bessel_j1(rm) ** 2) / 4.0
    out = _confluent_quotient(num, diag, delta, near)
    return out if out.shape else float(out)


def soft_edge_kernel(x, y) -> np.ndarray:
    """Airy kernel (Ai(x) Ai'(y) - Ai(y) Ai'(x))/(x - y), confluent diagonal."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    x, y = np.broadcast_arrays(x, y)
    ax, dax = airy_ai(x)
    ay, day = airy_ai(y)
    delta = x - y
    near = np.abs(delta) < _DIAG_SWITCH * (np.abs(x) + np.abs(y) + 1.0)
    num = ax * day - ay * dax
    m = (x + y) / 2.0
    am, dam = airy_ai(m)
    diag = dam * dam - m * am * am
    out = _confluent_quotient(num, diag, delta, near)
    return out if out.shape else float(out)


@dataclass(frozen=True)
class Kernel:
    """A correlation kernel with explicit diagonal handling.

    kind 'gue'/'lue' are the finite-n Hermite/Laguerre kernels (the latter
    restricted to parameter 0 for the Christoffel-Darboux form; other
    parameters fall back to the spectral sum), 'hard_edge' and 'soft_edge'
    the Bessel and Airy scaling limits.
    """

    kind: str
    n: int = 0
    a: int = 0

    @classmethod
    def gue(cls, n: int) -> "Kernel":
        if n < 1:
            raise DomainError("kernel needs n >= 1")
        return cls("gue", n)

    @classmethod
    def lue(cls, n: int, a: int = 0) -> "Kernel":
        if n < 1:
            raise DomainError("kernel needs n >= 1")
        if a < 0:
            raise DomainError("Laguerre parameter must be nonnegative")
        return cls("lue", n, a)

    @classmethod
    def hard_edge(cls) -> "Kernel":
        return cls("hard_edge")

    @classmethod
    def soft_edge(cls) -> "Kernel":
        return cls("soft_edge")

    def __call__(self, x, y):
        if self.kind == "gue":
            return gue_kernel(self.n, x, y)
        if self.kind == "lue":
            if self.a == 0:
                return lue_kernel(self.n, x, y)
            system = OrthoSystem("laguerre_lue", self.a)
            x_arr, y_arr = np.broadcast_arrays(
                np.asarray(x, dtype=float), np.asarray(y, dtype=float)
            )
            acc = np.zeros_like(x_arr)
            for m in range(self.n):
                acc += system.orthonormal(m, x_arr) * system.orthonormal(m, y_arr)
            return acc if acc.shape else float(acc)
        if self.kind == "hard_edge":
            return hard_edge_kernel(x, y)
        if self.kind == "soft_edge":
            return soft_edge_kernel(x, y)
        raise DomainError(f"unknown kernel kind {self.kind!r}")

    def diag(self, x):
        if self.kind == "gue":
            return gue_kernel_diag(self.n, x)
        if self.kind == "lue" and self.a == 0:
            return lue_kernel_diag(self.n, x)
        return self(x, x)
