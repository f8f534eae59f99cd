"""Bulk scaling limit of the z-side operator and the Fourier-side transform.

The scaled two-point function lives at angle 2*pi*X/N, so z = e^{2*pi*i*X/N}.
Writing u = 2*pi*i/N, every monomial z^m d^j/dz^j becomes
e^{(m-j)uX} * u^{-j} * prod_{l<j}(d/dX - l u); after multiplying the whole
operator by u^d (projectively irrelevant) all u-powers are nonnegative and
each contribution carries an explicit power of N.  The operator surviving
N -> infinity is the coefficient slice of the maximal N power.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from ..errors import (
    NonRealLimitError,
    OrderCollapseError,
    TruncationInstabilityError,
    UnsupportedExpansionError,
)
from ..exact.diffop import DiffOperator
from ..exact.poly import Poly, _VAR_INDEX
from ..exact.scalars import falling_factorial, falling_factorial_coeffs, scalar_mul_i

_Z = _VAR_INDEX["z"]
_N = _VAR_INDEX["N"]
_X = _VAR_INDEX["X"]
_PI = _VAR_INDEX["pi"]


def _raw_limit_slice(op: DiffOperator, truncation: int):
    """Top-N-power slice of the substituted operator, coefficients Gaussian.

    Returns (exponent of the extracted N power, list of Poly in X, pi per
    derivative order 0..op.order).
    """
    d = op.order
    # accumulate, per output derivative order k, a dict
    # (x_exp, pi_exp, n_exp) -> scalar
    acc = [{} for _ in range(d + 1)]
    for j, poly in enumerate(op.coeffs):
        stirling = falling_factorial_coeffs(j)
        for exps, c in poly.terms.items():
            m, n_exp = exps[_Z], exps[_N]
            if exps[_X] or exps[_PI]:
                raise UnsupportedExpansionError(
                    "z-side operator may involve z and N only"
                )
            for k in range(j + 1):
                s_jk = stirling[k]
                if not s_jk:
                    continue
                base = c * s_jk
                for t in range(truncation + 1):
                    # e^{(m-j)uX} contributes ((m-j)^t / t!) (uX)^t
                    if t == 0:
                        phase = Fraction(1)
                    elif m == j:
                        break
                    else:
                        phase = Fraction((m - j) ** t, factorial(t))
                    r = d - k + t  # total power of u = 2*pi*i/N
                    coeff = scalar_mul_i(base * phase * 2**r, r)
                    key = (t, r, n_exp - r)
                    cur = acc[k].get(key)
                    acc[k][key] = coeff if cur is None else cur + coeff
    top = None
    for bucket in acc:
        for (_, _, ne), c in bucket.items():
            if c and (top is None or ne > top):
                top = ne
    if top is None:
        raise OrderCollapseError("operator vanished in the scaling limit")
    sliced = []
    for bucket in acc:
        terms = {}
        for (t, r, ne), c in bucket.items():
            if ne == top and c:
                key = [0] * len(_VAR_INDEX)
                key[_X], key[_PI] = t, r
                terms[tuple(key)] = c
        sliced.append(Poly(terms))
    return top, sliced


def bulk_limit(op: DiffOperator) -> DiffOperator:
    """Leading operator of the bulk scaling limit, normalized and real.

    Raises OrderCollapseError if the limit drops derivative order,
    NonRealLimitError if the result is not a unit multiple of a real
    operator, and TruncationInstabilityError if the exponential-series
    truncation is not saturated.
    """
    if op.var != "z":
        raise ValueError("bulk limit expects an operator in z")
    if op.is_zero():
        raise OrderCollapseError("zero operator has no scaling limit")
    max_z = max((c.degree("z") or 0) for c in op.coeffs if not c.is_zero())
    truncation = max_z + op.order + 2
    top, sliced = _raw_limit_slice(op, truncation)
    top2, sliced2 = _raw_limit_slice(op, truncation + 2)
    if top != top2 or sliced != sliced2:
        raise TruncationInstabilityError(
            f"limit changed when truncation {truncation} -> {truncation + 2}"
        )
    limit = DiffOperator("X", sliced)
    if limit.order != op.order:
        raise OrderCollapseError(
            f"bulk limit has order {limit.order}, expected {op.order}"
        )
    out = limit.normalize()
    if not out.is_real():
        raise NonRealLimitError("bulk limit is not projectively real")
    return out


def parity_violations(op: DiffOperator) -> list:
    """Coefficient terms breaking the X/derivative parity pattern.

    In the bulk operators the coefficient of d^j/dX^j holds only X powers
    of parity j mod 2, and only even powers of pi.  Returns offending
    (j, exponent-tuple) pairs; empty means the pattern holds.
    """
    bad = []
    for j, poly in enumerate(op.coeffs):
        for exps in poly.terms:
            if (exps[_X] - j) % 2 or exps[_PI] % 2:
                bad.append((j, exps))
    return bad


def fourier_side(op: DiffOperator) -> DiffOperator:
    """Transform an X-side operator to the Fourier variable k.

    Each term X^m d^j/dX^j acts on the transform as
    (-i d/dk)^m composed with multiplication by (-i k)^j; boundary terms
    are assumed to vanish (solutions of interest decay).  The result is
    normalized and must be projectively real.
    """
    if op.var != "X":
        raise ValueError("fourier transform expects an operator in X")
    acc = {}
    for j, poly in enumerate(op.coeffs):
        for exps, c in poly.terms.items():
            m, pi_exp = exps[_X], exps[_PI]
            if exps[_Z] or exps[_N]:
                raise UnsupportedExpansionError(
                    "X-side operator may involve X and pi only"
                )
            base = scalar_mul_i(c, 3 * (m + j))  # (-i)^(m+j) = i^(3(m+j))
            for t in range(min(m, j) + 1):
                fall = falling_factorial(Fraction(j), t)
                coeff = base * (comb(m, t) * fall)
                key = [0] * len(_VAR_INDEX)
                key[_VAR_INDEX["k"]], key[_PI] = j - t, pi_exp
                order = m - t
                bucket = acc.setdefault(order, {})
                k = tuple(key)
                cur = bucket.get(k)
                bucket[k] = coeff if cur is None else cur + coeff
    if not acc:
        raise OrderCollapseError("zero operator has no Fourier side")
    top = max(acc)
    coeffs = [Poly(acc.get(j, {})) for j in range(top + 1)]
    out = DiffOperator("k", coeffs).normalize()
    if not out.is_real():
        raise NonRealLimitError("Fourier-side operator is not projectively real")
    return out
