"""Domain-guarded special functions and exact scalar helpers.

The float wrappers delegate to scipy but refuse arguments outside the range
on which we claim 1e-12 relative accuracy; callers are expected to handle
large arguments analytically (tail bounds) rather than leaning on library
behaviour far from the origin.  The exact helpers return Fractions and exist
to cross-check the float recurrences.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from scipy import special as _sp

from ..errors import DomainError

BESSEL_RANGE = 50.0
AIRY_RANGE = (-20.0, 10.0)
SI_RANGE = 40.0


def _check_range(x: np.ndarray, lo: float, hi: float, name: str) -> None:
    if not np.all(np.isfinite(x)):
        raise DomainError(f"{name} argument must be finite")
    if np.any(x < lo) or np.any(x > hi):
        raise DomainError(f"{name} argument outside supported range [{lo}, {hi}]")


def bessel_j0(x):
    x = np.asarray(x, dtype=float)
    _check_range(x, -BESSEL_RANGE, BESSEL_RANGE, "bessel_j0")
    out = _sp.j0(x)
    return out if out.shape else float(out)


def bessel_j1(x):
    x = np.asarray(x, dtype=float)
    _check_range(x, -BESSEL_RANGE, BESSEL_RANGE, "bessel_j1")
    out = _sp.j1(x)
    return out if out.shape else float(out)


def airy_ai(x):
    """(Ai(x), Ai'(x)) on the guarded interval."""
    x = np.asarray(x, dtype=float)
    _check_range(x, AIRY_RANGE[0], AIRY_RANGE[1], "airy_ai")
    ai, aip, _, _ = _sp.airy(x)
    if ai.shape:
        return ai, aip
    return float(ai), float(aip)


def sine_integral(x):
    """Si(x) = integral of sin(t)/t from 0 to x."""
    x = np.asarray(x, dtype=float)
    _check_range(x, -SI_RANGE, SI_RANGE, "sine_integral")
    si, _ = _sp.sici(x)
    return si if si.shape else float(si)


def erf(x):
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise DomainError("erf argument must be finite")
    out = _sp.erf(x)
    return out if out.shape else float(out)


def upper_gamma_regularized(a: float, x: float) -> float:
    """Q(a, x) = Gamma(a, x)/Gamma(a), the normalized upper incomplete gamma."""
    if a <= 0 or x < 0:
        raise DomainError("upper_gamma_regularized needs a > 0 and x >= 0")
    return float(_sp.gammaincc(a, x))


def gamma_half_ratio(p: int) -> Fraction:
    """Gamma(1/2 + p)/Gamma(1/2) = (2p - 1)!!/2^p, exact."""
    if p < 0:
        raise DomainError("gamma_half_ratio needs p >= 0")
    num = 1
    for j in range(1, 2 * p, 2):
        num *= j
    return Fraction(num, 2**p)


def hyp2f1_terminating(a: int, b: int, c: Fraction, z: Fraction) -> Fraction:
    """2F1(a, b; c; z) with a or b a nonpositive integer, exact.

    The series terminates, so no convergence question arises; c must avoid
    nonpositive integers reached before termination.
    """
    if a > 0 and b > 0:
        raise DomainError("hyp2f1_terminating needs a nonpositive integer in a or b")
    if b <= 0 and (a > 0 or b > a):
        a, b = b, a
    terms = -a
    total = Fraction(0)
    term = Fraction(1)
    c = Fraction(c)
    z = Fraction(z)
    for m in range(terms + 1):
        total += term
        if m == terms:
            break
        denom = (c + m) * (m + 1)
        if denom == 0:
            raise DomainError("hyp2f1_terminating hit a pole of the c pochhammer")
        term = term * (a + m) * (b + m) * z / denom
    return total


def laguerre_exact(n: int, alpha: int, x: Fraction) -> Fraction:
    """L_n^{(alpha)}(x) by the three-term recurrence in exact arithmetic."""
    if n < 0:
        raise DomainError("laguerre_exact needs n >= 0")
    x = Fraction(x)
    prev = Fraction(0)
    cur = Fraction(1)
    for m in range(n):
        prev, cur = cur, ((2 * m + 1 + alpha - x) * cur - (m + alpha) * prev) / (m + 1)
    return cur
