"""Series solutions of the bulk operators.

Given an operator in X with polynomial coefficients in (X, pi), this module
extracts the indicial data at the regular singular point X = 0, solves the
Frobenius recurrence for a chosen exponent, builds the non-oscillatory
expansion 1 + sum c_n X^(-2n) at infinity, and locates the oscillatory
branches e^(2*pi*i*p*X) X^(-a).  Everything is exact rational arithmetic;
pi is carried symbolically throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import (
    DomainError,
    IrregularSingularityError,
    ResonanceError,
    UnsupportedExpansionError,
    ZeroOperatorError,
)
from .exact import DiffOperator, FormalSeries, falling_factorial
from .exact.poly import _VAR_INDEX
from .exact.scalars import (
    PiPoly,
    demote,
    falling_factorial_coeffs,
    scalar_im,
    scalar_mul_i,
    scalar_re,
)
from .exact.series import asymptotic_series_from_cn

__all__ = [
    "AsymptoticExpansion",
    "IndicialData",
    "OscillatoryExponent",
    "asymptotic_nonoscillatory",
    "frobenius",
    "indicial_roots",
    "oscillatory_exponents",
]


def _level_terms(op: DiffOperator):
    """Group terms by level sigma = X-degree - derivative order.

    A term c * X^x * pi^e * D^j maps X^s to c * [s]_j * pi^e * X^(s+sigma),
    so each level acts diagonally on exponents.  Returns {sigma: [(j, PiPoly)]}
    with the PiPoly coefficients summed per derivative order.
    """
    iv = _VAR_INDEX[op.var]
    ip = _VAR_INDEX["pi"]
    levels: dict[int, dict[int, PiPoly]] = {}
    for j in range(op.order + 1):
        for exps, c in op.coefficient(j).terms.items():
            foreign = [
                name
                for name, i in _VAR_INDEX.items()
                if exps[i] and i not in (iv, ip)
            ]
            if foreign:
                raise UnsupportedExpansionError(
                    f"coefficient contains {foreign[0]}; expected only "
                    f"{op.var} and pi"
                )
            if scalar_im(c):
                raise UnsupportedExpansionError(
                    "series analysis requires real coefficients"
                )
            sigma = exps[iv] - j
            bucket = levels.setdefault(sigma, {})
            bucket[j] = bucket.get(j, PiPoly.zero()) + PiPoly.monomial(
                scalar_re(c), exps[ip]
            )
    return {sigma: sorted(bucket.items()) for sigma, bucket in levels.items()}


def _level_poly_at(terms, s) -> PiPoly:
    """Evaluate P_sigma(s) = sum_j coeff_j [s]_j for one level."""
    out = PiPoly.zero()
    for j, coeff in terms:
        out = out + coeff * falling_factorial(Fraction(s), j)
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def _rational_roots(coeffs):
    """Rational roots with multiplicity of sum coeffs[i] s^i, plus the
    residual factor left after dividing them out."""
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    work = [Fraction(c * lcm) for c in coeffs]
    while work and work[-1] == 0:
        work.pop()
    roots: list[Fraction] = []
    low = 0
    while work[low] == 0:
        roots.append(Fraction(0))
        low += 1
    work = work[low:]
    if len(work) > 1:
        candidates = sorted(
            {
                Fraction(sign * p, q)
                for p in _divisors(int(work[0]))
                for q in _divisors(int(work[-1]))
                for sign in (1, -1)
            }
        )
        for cand in candidates:
            while len(work) > 1:
                # synthetic division by (s - cand)
                quo = [work[-1]]
                for a in work[-2::-1]:
                    quo.append(a + cand * quo[-1])
                if quo[-1] != 0:
                    break
                roots.append(cand)
                work = quo[-2::-1]
    return sorted(roots), tuple(work)


@dataclass(frozen=True)
class IndicialData:
    """Indicial polynomial at X = 0 (ascending in s) and its rational roots."""

    polynomial: tuple[PiPoly, ...]
    roots: tuple[Fraction, ...]
    residual_degree: int

    def multiplicity(self, root) -> int:
        return sum(1 for r in self.roots if r == Fraction(root))


def indicial_roots(op: DiffOperator) -> IndicialData:
    """Indicial data of op at X = 0.

    The lowest level must reach the full operator order (regular singular
    point).  A rational root must annihilate the polynomial slice at every
    pi-power separately, since pi is transcendental.
    """
    if op.is_zero():
        raise ZeroOperatorError("no indicial data for the zero operator")
    levels = _level_terms(op)
    sigma_min = min(levels)
    terms = levels[sigma_min]
    top_j = max(j for j, _ in terms)
    if top_j != op.order:
        raise IrregularSingularityError(
            f"lowest level {sigma_min} reaches derivative order {top_j} "
            f"< operator order {op.order}"
        )
    deg = op.order
    poly = [PiPoly.zero()] * (deg + 1)
    for j, coeff in terms:
        for k, st in enumerate(falling_factorial_coeffs(j)):
            poly[k] = poly[k] + coeff * st
    pi_powers = sorted({e for p in poly for e in p.terms})
    slice_results = [
        _rational_roots([p.terms.get(e, Fraction(0)) for p in poly])
        for e in pi_powers
    ]
    roots, residual = slice_results[0]
    for other_roots, other_residual in slice_results[1:]:
        pool = list(other_roots)
        kept = []
        for r in roots:
            if r in pool:
                pool.remove(r)
                kept.append(r)
        roots = kept
        residual = max(residual, other_residual, key=len)
    return IndicialData(tuple(poly), tuple(roots), len(residual) - 1)


def _pivot_divide(rhs: PiPoly, pivot: PiPoly) -> PiPoly:
    try:
        return rhs / pivot
    except ValueError:
        raise UnsupportedExpansionError(
            f"recurrence pivot {pivot} is not a pi-monomial"
        ) from None


def frobenius(op: DiffOperator, rho, n_terms: int) -> FormalSeries:
    """Frobenius solution X^rho (1 + sum a_m X^m), coefficients in Q[pi].

    rho must be an indicial root.  A vanishing pivot with nonzero right-hand
    side raises ResonanceError naming the offending shift (logarithmic
    branches are out of scope); with zero right-hand side the a_m = 0 branch
    is selected.
    """
    rho = Fraction(rho)
    levels = _level_terms(op)
    sigma_min = min(levels)
    offsets = sorted(s - sigma_min for s in levels)
    if not _level_poly_at(levels[sigma_min], rho).is_zero():
        raise DomainError(f"{rho} is not an indicial root")
    coeffs = [PiPoly.one()]
    for m in range(1, n_terms + 1):
        rhs = PiPoly.zero()
        for nu in offsets:
            if 0 < nu <= m:
                rhs = rhs - _level_poly_at(
                    levels[sigma_min + nu], rho + m - nu
                ) * coeffs[m - nu]
        pivot = _level_poly_at(levels[sigma_min], rho + m)
        if pivot.is_zero():
            if not rhs.is_zero():
                raise ResonanceError(
                    f"resonant shift {m}: {rho + m} is an indicial root "
                    f"with nonzero right-hand side"
                )
            coeffs.append(PiPoly.zero())
        else:
            coeffs.append(_pivot_divide(rhs, pivot))
    return FormalSeries("frobenius", op.var, rho, tuple(coeffs))


@dataclass(frozen=True)
class AsymptoticExpansion:
    """Tail 1 + sum_{n>=1} c[n-1] X^(-2n) at infinity."""

    var: str
    c: tuple[PiPoly, ...]

    def series(self) -> FormalSeries:
        return asymptotic_series_from_cn(self.var, self.c)


def asymptotic_nonoscillatory(op: DiffOperator, n_max: int) -> AsymptoticExpansion:
    """Unique tail coefficients c_1..c_n_max of 1 + sum c_n X^(-2n).

    The recurrence descends from the top level, which must annihilate the
    constant; a vanishing pivot raises ResonanceError with its index, and a
    nonzero odd-order coefficient rejects the ansatz.
    """
    levels = _level_terms(op)
    sigma_max = max(levels)
    offsets = sorted(sigma_max - s for s in levels)
    if not _level_poly_at(levels[sigma_max], 0).is_zero():
        raise UnsupportedExpansionError(
            "constant term is not annihilated at leading order"
        )
    g = [PiPoly.one()]
    for m in range(1, 2 * n_max + 1):
        rhs = PiPoly.zero()
        for nu in offsets:
            if 0 < nu <= m:
                rhs = rhs - _level_poly_at(
                    levels[sigma_max - nu], -(m - nu)
                ) * g[m - nu]
        pivot = _level_poly_at(levels[sigma_max], -m)
        if pivot.is_zero():
            if not rhs.is_zero():
                raise ResonanceError(f"vanishing pivot at tail index {m}")
            g.append(PiPoly.zero())
        else:
            g.append(_pivot_divide(rhs, pivot))
    for m in range(1, 2 * n_max + 1, 2):
        if not g[m].is_zero():
            raise UnsupportedExpansionError(
                f"odd tail order {m} is nonzero; ansatz 1 + sum c_n X^(-2n) "
                f"does not apply"
            )
    return AsymptoticExpansion(op.var, tuple(g[2 * n] for n in range(1, n_max + 1)))


@dataclass(frozen=True)
class OscillatoryExponent:
    """Branch e^(2*pi*i*p*X) X^(-decay) admitted to two leading orders."""

    frequency: int
    decay: Fraction


def oscillatory_exponents(op: DiffOperator) -> list[OscillatoryExponent]:
    """All (p, a) with e^(2*pi*i*p*X) X^(-a) satisfying op to two orders.

    The search is bounded by p <= (max pi-power)/2 + 1, the frequency
    content of coefficients polynomial in pi*X.
    """
    iv = _VAR_INDEX[op.var]
    ip = _VAR_INDEX["pi"]
    flat = []
    max_pi = 0
    for j in range(op.order + 1):
        for exps, c in op.coefficient(j).terms.items():
            flat.append((j, exps[iv], exps[ip], c))
            max_pi = max(max_pi, exps[ip])
    if not flat:
        return []
    x_max = max(x for _, x, _, _ in flat)

    def _symbol(p: int, x_target: int, downshift: int):
        # sum of c * j^(downshift) * (2 pi i p)^(j - downshift) over terms
        # with X-degree x_target, keyed by total pi-power
        out: dict[int, object] = {}
        for j, x, e, c in flat:
            if x != x_target or j < downshift:
                continue
            jj = j - downshift
            mult = j if downshift else 1
            val = scalar_mul_i(c * mult * 2**jj * p**jj, jj)
            key = e + jj
            total = demote(out.get(key, 0) + val)
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        return out

    found = []
    for p in range(1, max_pi // 2 + 2):
        if _symbol(p, x_max, 0):
            continue
        den = _symbol(p, x_max, 1)
        num = _symbol(p, x_max - 1, 0)
        if not den:
            continue
        if not num:
            found.append(OscillatoryExponent(p, Fraction(0)))
            continue
        if set(num) != set(den):
            continue
        ratios = {demote(num[k] / den[k]) for k in num}
        if len(ratios) != 1:
            continue
        a = ratios.pop()
        if scalar_im(a):
            continue
        found.append(OscillatoryExponent(p, Fraction(scalar_re(a))))
    return found
