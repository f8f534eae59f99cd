"""Sparse exact polynomials in the indeterminates (X, z, k, pi, N).

Exponent vectors are full tuples in the canonical variable order; comparing
exponent tuples therefore IS the canonical lexicographic monomial order.
Only N admits negative (Laurent) exponents.  Coefficients are Fraction, or
GaussianRational when genuinely complex; arithmetic demotes automatically.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import LaurentError
from .scalars import (
    GaussianRational,
    content_of,
    demote,
    scalar_im,
    scalar_re,
)

VARS = ("X", "z", "k", "pi", "N")
_VAR_INDEX = {v: i for i, v in enumerate(VARS)}
_N_INDEX = _VAR_INDEX["N"]
_NVARS = len(VARS)
_ZEXP = (0,) * _NVARS

_SCALARS = (int, Fraction, GaussianRational)


def _check_exponents(exps):
    for i, e in enumerate(exps):
        if e < 0 and i != _N_INDEX:
            raise LaurentError(
                f"negative exponent on {VARS[i]}; only N admits Laurent exponents"
            )


class Poly:
    """Immutable sparse polynomial: dict of exponent tuple -> scalar."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exps, c in terms.items():
                c = demote(c)
                if isinstance(c, int):
                    c = Fraction(c)
                if not c:
                    continue
                exps = tuple(int(e) for e in exps)
                if len(exps) != _NVARS:
                    raise ValueError(f"exponent tuple must have length {_NVARS}")
                _check_exponents(exps)
                clean[exps] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({_ZEXP: c})

    @classmethod
    def one(cls) -> "Poly":
        return cls.const(1)

    @classmethod
    def var(cls, name: str, power: int = 1, coeff=1) -> "Poly":
        exps = [0] * _NVARS
        exps[_VAR_INDEX[name]] = power
        return cls({tuple(exps): coeff})

    @classmethod
    def monomial(cls, coeff, **powers) -> "Poly":
        exps = [0] * _NVARS
        for name, p in powers.items():
            exps[_VAR_INDEX[name]] = p
        return cls({tuple(exps): coeff})

    # -- predicates / views --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {_ZEXP}

    def constant_value(self):
        if not self.terms:
            return Fraction(0)
        if set(self.terms) != {_ZEXP}:
            raise ValueError("not a constant polynomial")
        return self.terms[_ZEXP]

    def is_real(self) -> bool:
        return all(not isinstance(c, GaussianRational) or c.im == 0
                   for c in self.terms.values())

    def variables(self):
        """Names of indeterminates that actually occur."""
        used = [False] * _NVARS
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        return tuple(v for i, v in enumerate(VARS) if used[i])

    def degree(self, name: str):
        """Maximal exponent of `name`, or None for the zero polynomial."""
        if not self.terms:
            return None
        i = _VAR_INDEX[name]
        return max(exps[i] for exps in self.terms)

    def min_degree(self, name: str):
        if not self.terms:
            return None
        i = _VAR_INDEX[name]
        return min(exps[i] for exps in self.terms)

    def coefficient_of(self, name: str, power: int) -> "Poly":
        """Slice: polynomial coefficient of name**power (exponent zeroed out)."""
        i = _VAR_INDEX[name]
        out = {}
        for exps, c in self.terms.items():
            if exps[i] == power:
                reduced = exps[:i] + (0,) + exps[i + 1:]
                out[reduced] = c
        return Poly(out)

    def leading(self):
        """(exponent tuple, coefficient) of the lexicographically largest term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms)
        return exps, self.terms[exps]

    def content(self) -> Fraction:
        return content_of(self.terms.values())

    def sorted_terms(self):
        return sorted(self.terms.items())

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, _SCALARS):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        out = dict(self.terms)
        for exps, c in other.terms.items():
            cur = out.get(exps)
            out[exps] = c if cur is None else cur + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({exps: -c for exps, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, _SCALARS):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            if not other:
                return Poly()
            return Poly({exps: c * other for exps, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                cur = out.get(key)
                prod = c1 * c2
                out[key] = prod if cur is None else cur + prod
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            if not other:
                raise ZeroDivisionError("scalar division by zero")
            if isinstance(other, GaussianRational):
                inv = GaussianRational(1) / other
            else:
                inv = Fraction(1) / Fraction(other)
            return self * inv
        return NotImplemented

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = Poly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- calculus / substitution ----------------------------------------------

    def diff(self, name: str) -> "Poly":
        i = _VAR_INDEX[name]
        out = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            key = exps[:i] + (e - 1,) + exps[i + 1:]
            out[key] = out.get(key, Fraction(0)) + c * e
        return Poly(out)

    def shift(self, name: str, power: int) -> "Poly":
        """Multiply by name**power (power may be negative only for N)."""
        i = _VAR_INDEX[name]
        out = {}
        for exps, c in self.terms.items():
            key = exps[:i] + (exps[i] + power,) + exps[i + 1:]
            out[key] = c
        return Poly(out)

    def substitute(self, name: str, value: "Poly") -> "Poly":
        """Exact substitution name -> value (value a Poly); name must have
        nonnegative exponents."""
        i = _VAR_INDEX[name]
        out = Poly.zero()
        powers = {0: Poly.one()}
        for exps, c in self.terms.items():
            e = exps[i]
            if e < 0:
                raise LaurentError("cannot substitute into a Laurent exponent")
            if e not in powers:
                p = powers[max(powers)]
                for _ in range(max(powers), e):
                    p = p * value
                    powers[max(powers) + 1] = p
            rest = Poly({exps[:i] + (0,) + exps[i + 1:]: c})
            out = out + rest * powers[e]
        return out

    def evalf(self, **values) -> complex:
        """Numeric evaluation; every occurring variable must be supplied."""
        idx_val = {}
        for name, v in values.items():
            idx_val[_VAR_INDEX[name]] = v
        total = 0j
        for exps, c in self.terms.items():
            term = complex(scalar_re(c)) + 1j * complex(scalar_im(c))
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                if i not in idx_val:
                    raise ValueError(f"no value supplied for {VARS[i]}")
                term *= idx_val[i] ** e
            total += term
        return total

    # -- display ---------------------------------------------------------------

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in sorted(self.terms.items(), reverse=True):
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(VARS[i])
                elif e:
                    factors.append(f"{VARS[i]}^{e}")
            cs = str(c)
            if factors and cs == "1":
                parts.append("*".join(factors))
            elif factors and cs == "-1":
                parts.append("-" + "*".join(factors))
            else:
                parts.append("*".join([cs] + factors) if factors else cs)
        return " + ".join(parts).replace("+ -", "- ")


def poly_X(power: int = 1) -> Poly:
    return Poly.var("X", power)


def poly_z(power: int = 1) -> Poly:
    return Poly.var("z", power)


def poly_k(power: int = 1) -> Poly:
    return Poly.var("k", power)


def poly_pi(power: int = 1) -> Poly:
    return Poly.var("pi", power)


def poly_N(power: int = 1) -> Poly:
    return Poly.var("N", power)
