"""Linear differential operators with exact polynomial coefficients.

An operator is sum_j p_j(vars) * d^j/dv^j acting on functions of a single
variable v.  Composition uses the Leibniz rule; normalization divides by the
collective rational content, strips a common unit i and any common power of
pi (a scalar despite being tracked as a variable), and fixes the sign so the
leading coefficient of the highest-order term is positive.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..errors import NonRealLimitError, ZeroOperatorError
from .poly import Poly
from .scalars import GaussianRational, content_of, demote, scalar_im, scalar_re

_SCALARS = (int, Fraction, GaussianRational)


class DiffOperator:
    """Immutable operator sum_j coeffs[j] * D^j in the variable `var`."""

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs):
        coeffs = [c if isinstance(c, Poly) else Poly.const(c) for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("DiffOperator is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, var: str) -> "DiffOperator":
        return cls(var, [])

    @classmethod
    def identity(cls, var: str) -> "DiffOperator":
        return cls(var, [Poly.one()])

    @classmethod
    def derivative(cls, var: str, order: int = 1) -> "DiffOperator":
        return cls(var, [Poly.zero()] * order + [Poly.one()])

    @classmethod
    def mul_by(cls, var: str, poly: Poly) -> "DiffOperator":
        return cls(var, [poly])

    # -- structure -------------------------------------------------------------

    @property
    def order(self) -> int:
        """Derivative order; -1 for the zero operator."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, j: int) -> Poly:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Poly.zero()

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coeffs)

    # -- algebra ----------------------------------------------------------------

    def _check_var(self, other: "DiffOperator"):
        if self.var != other.var:
            raise ValueError(f"operator variables differ: {self.var} vs {other.var}")

    def __add__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        self._check_var(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return DiffOperator(
            self.var,
            [self.coefficient(j) + other.coefficient(j) for j in range(n)],
        )

    def __neg__(self):
        return DiffOperator(self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        """Scalar or polynomial left/right multiplication (commutative scale)."""
        if isinstance(other, _SCALARS) or isinstance(other, Poly):
            return DiffOperator(self.var, [c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def compose(self, other: "DiffOperator") -> "DiffOperator":
        """Operator composition self(other(f)) via the Leibniz rule."""
        self._check_var(other)
        if self.is_zero() or other.is_zero():
            return DiffOperator.zero(self.var)
        out = [Poly.zero()] * (self.order + other.order + 1)
        for i, p in enumerate(self.coeffs):
            if p.is_zero():
                continue
            for j, q in enumerate(other.coeffs):
                if q.is_zero():
                    continue
                qt = q
                for t in range(i + 1):
                    if not qt.is_zero():
                        out[i - t + j] = out[i - t + j] + p * qt * comb(i, t)
                    qt = qt.diff(self.var)
        return DiffOperator(self.var, out)

    def apply_poly(self, p: Poly) -> Poly:
        """Apply the operator to a polynomial in its variable."""
        out = Poly.zero()
        dp = p
        for j, c in enumerate(self.coeffs):
            if not c.is_zero():
                out = out + c * dp
            dp = dp.diff(self.var)
        return out

    def __eq__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var, self.coeffs))

    # -- normalization ------------------------------------------------------------

    def normalize(self) -> "DiffOperator":
        """Divide by collective content, strip a common unit i, fix the sign.

        The result is projectively canonical: idempotent, real whenever the
        operator is a unit multiple of a real operator.
        """
        if self.is_zero():
            raise ZeroOperatorError("cannot normalize the zero operator")
        scalars = [c for poly in self.coeffs for c in poly.terms.values()]
        all_real = all(scalar_im(c) == 0 for c in scalars)
        all_imag = all(scalar_re(c) == 0 for c in scalars)
        coeffs = list(self.coeffs)
        if all_imag and not all_real:
            coeffs = [c * GaussianRational(0, -1) for c in coeffs]
            scalars = [c for poly in coeffs for c in poly.terms.values()]
        cont = content_of(scalars)
        _, lead = coeffs[-1].leading()
        if scalar_re(lead) < 0 or (scalar_re(lead) == 0 and scalar_im(lead) < 0):
            cont = -cont
        coeffs = [c / cont for c in coeffs]
        pi_shift = min(c.min_degree("pi") for c in coeffs if not c.is_zero())
        if pi_shift:
            coeffs = [c.shift("pi", -pi_shift) for c in coeffs]
        return DiffOperator(self.var, coeffs)

    def normalized_real(self) -> "DiffOperator":
        """normalize() and require a real result."""
        out = self.normalize()
        if not out.is_real():
            raise NonRealLimitError(
                "operator is not a unit multiple of a real operator"
            )
        return out

    # -- display --------------------------------------------------------------------

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for j in range(self.order, -1, -1):
            c = self.coefficient(j)
            if c.is_zero():
                continue
            d = f"D{self.var}^{j}" if j > 1 else (f"D{self.var}" if j == 1 else "")
            cs = repr(c)
            if " " in cs or j == 0:
                parts.append(f"({cs})*{d}" if d else f"({cs})")
            else:
                parts.append(f"{cs}*{d}" if d else cs)
        return " + ".join(parts)


def delta_z() -> DiffOperator:
    """The Euler-type operator z(1-z) d/dz used by the recurrence system."""
    z = Poly.var("z")
    return DiffOperator("z", [Poly.zero(), z * (Poly.one() - z)])
