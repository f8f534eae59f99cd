"""Truncated exact series: Frobenius (ascending) and asymptotic (descending).

A series is  var^exponent * sum_m coeffs[m] * var^(dir*m)  with dir = +1 for
kind "frobenius" and dir = -1 for kind "asymptotic"; coefficients are exact
Laurent polynomials in pi.  Retained orders m = 0..len(coeffs)-1 are valid;
applying an operator never contaminates retained orders (unknown tail terms
only land beyond them), so validity length is preserved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import UnsupportedExpansionError
from .diffop import DiffOperator
from .poly import VARS, Poly, _VAR_INDEX
from .scalars import PiPoly, falling_factorial, scalar_im

_PI_INDEX = _VAR_INDEX["pi"]

KINDS = ("frobenius", "asymptotic")


@dataclass(frozen=True)
class FormalSeries:
    kind: str
    var: str
    exponent: Fraction
    coeffs: tuple

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        object.__setattr__(self, "exponent", Fraction(self.exponent))
        object.__setattr__(
            self,
            "coeffs",
            tuple(c if isinstance(c, PiPoly) else PiPoly(c) for c in self.coeffs),
        )

    @property
    def direction(self) -> int:
        return 1 if self.kind == "frobenius" else -1

    @property
    def order(self) -> int:
        """Largest retained relative order."""
        return len(self.coeffs) - 1

    def coefficient(self, m: int) -> PiPoly:
        if 0 <= m <= self.order:
            return self.coeffs[m]
        raise IndexError(f"order {m} beyond retained truncation {self.order}")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def scaled(self, factor) -> "FormalSeries":
        """Same series with every coefficient multiplied by factor."""
        if not isinstance(factor, PiPoly):
            factor = PiPoly.monomial(factor)
        return FormalSeries(
            self.kind, self.var, self.exponent,
            tuple(factor * c for c in self.coeffs),
        )

    def evalf_partial(self, x: float, pi_value: float) -> float:
        """Numeric partial sum at x (diagnostic use)."""
        total = 0.0
        for m, c in enumerate(self.coeffs):
            p = float(self.exponent) + self.direction * m
            total += c.evalf(pi_value) * x**p
        return total

    def __repr__(self):
        v = self.var
        parts = []
        for m, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            p = self.exponent + self.direction * m
            parts.append(f"({c})*{v}^({p})")
        body = " + ".join(parts) if parts else "0"
        return f"<{self.kind} series {body} + O({v}^({self.exponent + self.direction * (self.order + 1)}))>"


def frobenius_series(var: str, exponent, coeffs) -> FormalSeries:
    return FormalSeries("frobenius", var, Fraction(exponent), tuple(coeffs))


def asymptotic_series_from_cn(var: str, cn) -> FormalSeries:
    """Series 1 + sum_n c_n var^(-2n) from the list [c_1, c_2, ...]."""
    coeffs = [PiPoly.one()]
    for c in cn:
        coeffs.append(PiPoly.zero())
        coeffs.append(c if isinstance(c, PiPoly) else PiPoly(c))
    return FormalSeries("asymptotic", var, Fraction(0), tuple(coeffs))


def _op_levels(op: DiffOperator):
    """Decompose op coefficients into (j, var_exp, pi_exp, Fraction coeff)."""
    iv = _VAR_INDEX[op.var]
    items = []
    for j, poly in enumerate(op.coeffs):
        for exps, c in poly.terms.items():
            for i, e in enumerate(exps):
                if e and i not in (iv, _PI_INDEX):
                    raise UnsupportedExpansionError(
                        f"operator coefficient involves {VARS[i]}; series "
                        f"application needs coefficients in ({op.var}, pi) only"
                    )
            if scalar_im(c) != 0:
                raise UnsupportedExpansionError(
                    "series application needs real operator coefficients"
                )
            items.append((j, exps[iv], exps[_PI_INDEX], Fraction(c)))
    return items


def op_apply_series(op: DiffOperator, series: FormalSeries) -> FormalSeries:
    """Apply a differential operator to a truncated series, exactly.

    The result keeps the input's kind and retained length; its leading
    exponent shifts by the extreme coefficient offset (b - j) of the operator.
    """
    if op.var != series.var:
        raise ValueError("operator and series variables differ")
    if op.is_zero():
        return FormalSeries(series.kind, series.var, series.exponent,
                            [PiPoly.zero()] * len(series.coeffs))
    items = _op_levels(op)
    offsets = [b - j for (j, b, _, _) in items]
    dirn = series.direction
    base = min(offsets) if dirn > 0 else max(offsets)
    out = [PiPoly.zero() for _ in series.coeffs]
    for j, b, pe, c in items:
        slot_shift = dirn * ((b - j) - base)
        for m, a in enumerate(series.coeffs):
            if a.is_zero():
                continue
            slot = m + slot_shift
            if slot > series.order:
                continue
            s = series.exponent + dirn * m
            fac = c * falling_factorial(s, j)
            if fac:
                out[slot] = out[slot] + PiPoly.monomial(fac, pe) * a
    return FormalSeries(series.kind, series.var,
                        series.exponent + base, tuple(out))
