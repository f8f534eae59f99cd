"""Rational functions with univariate denominators, as elimination produces.

The scalar elimination chain only ever divides by products of recurrence
constants, which are polynomials in N alone, so denominators here are
univariate (or constant).  Reduction uses exact univariate gcd; full
multivariate simplification is deliberately out of scope.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Poly, _VAR_INDEX
from .scalars import demote, scalar_re


def _univar(poly: Poly):
    """Return (name, {exp: coeff}) for a univariate/constant Poly."""
    used = poly.variables()
    if len(used) > 1:
        raise ValueError(f"polynomial in {used} is not univariate")
    name = used[0] if used else "N"
    i = _VAR_INDEX[name]
    coeffs = {}
    for exps, c in poly.terms.items():
        coeffs[exps[i]] = c
    return name, coeffs


def _from_univar(name: str, coeffs: dict) -> Poly:
    return sum(
        (Poly.var(name, e, c) if e else Poly.const(c) for e, c in coeffs.items()),
        Poly.zero(),
    )


def _udeg(coeffs: dict) -> int:
    live = [e for e, c in coeffs.items() if c]
    return max(live) if live else -1


def _udivmod(num: dict, den: dict):
    """Exact univariate division with remainder over the scalar field."""
    num = {e: c for e, c in num.items() if c}
    dden = _udeg(den)
    lead = den[dden]
    quo = {}
    while _udeg(num) >= dden:
        dn = _udeg(num)
        q = num[dn] / lead
        quo[dn - dden] = q
        for e, c in den.items():
            if not c:
                continue
            key = dn - dden + e
            num[key] = num.get(key, Fraction(0)) - q * c
        num = {e: c for e, c in num.items() if c}
    return quo, num


def univariate_gcd(a: dict, b: dict) -> dict:
    """Monic gcd of two univariate coefficient dicts over Q (or Q(i))."""
    a = {e: c for e, c in a.items() if c}
    b = {e: c for e, c in b.items() if c}
    while b:
        _, r = _udivmod(a, b)
        a, b = b, r
    if not a:
        return {0: Fraction(1)}
    lead = a[_udeg(a)]
    return {e: demote(c / lead) for e, c in a.items()}


class RationalFn:
    """num/den with den univariate, stored reduced and den content-normalized."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num, den = self._reduce(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFn is immutable")

    @staticmethod
    def _reduce(num: Poly, den: Poly):
        if den.is_constant():
            c = den.constant_value()
            return num / c, Poly.one()
        dname, dcoeffs = _univar(den)
        if num.is_zero():
            return num, Poly.one()
        # gcd of den with every dname-profile of num (grouped by the other vars)
        i = _VAR_INDEX[dname]
        slices: dict = {}
        for exps, c in num.terms.items():
            rest = exps[:i] + (0,) + exps[i + 1:]
            slices.setdefault(rest, {})[exps[i]] = c
        g = dcoeffs
        for sl in slices.values():
            g = univariate_gcd(g, sl)
            if _udeg(g) == 0:
                break
        if _udeg(g) > 0:
            dq, dr = _udivmod(dcoeffs, g)
            assert not dr
            den = _from_univar(dname, dq)
            new_terms = {}
            for rest, sl in slices.items():
                q, r = _udivmod(sl, g)
                assert not r
                for e, c in q.items():
                    key = rest[:i] + (e,) + rest[i + 1:]
                    new_terms[key] = c
            num = Poly(new_terms)
        if den.is_constant():
            return num / den.constant_value(), Poly.one()
        # normalize: den content 1, leading coefficient positive
        cont = den.content()
        _, lead = den.leading()
        if scalar_re(lead) < 0:
            cont = -cont
        return num / cont, den / cont

    @classmethod
    def from_poly(cls, p: Poly) -> "RationalFn":
        return cls(p, Poly.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        if isinstance(other, Poly):
            other = RationalFn.from_poly(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return RationalFn(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, Poly):
            other = RationalFn.from_poly(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            other = RationalFn.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RationalFn(self.num * other, self.den)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Poly):
            other = RationalFn.from_poly(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den == Poly.one():
            return repr(self.num)
        return f"({self.num}) / ({self.den})"
