"""Exact scalar types: rationals, Gaussian rationals and Laurent polynomials in pi.

`Rational` is stdlib `fractions.Fraction` (arbitrary precision, lowest terms,
positive denominator), re-exported so call sites name the contract rather than
the implementation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

Rational = Fraction

_FracLike = (int, Fraction)


class GaussianRational:
    """Element of Q(i) with exact Fraction real and imaginary parts.

    Instances are immutable.  Arithmetic stays inside the class; the Poly
    layer demotes back to Fraction whenever the imaginary part vanishes.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- predicates ---------------------------------------------------------

    @property
    def is_real(self) -> bool:
        return self.im == 0

    @property
    def is_imaginary(self) -> bool:
        return self.re == 0 and self.im != 0

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, _FracLike):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.im == 0 and o.im == 0:
            return GaussianRational(self.re * o.re)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n2 = o.re * o.re + o.im * o.im
        if n2 == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return self * GaussianRational(o.re / n2, -o.im / n2)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _FracLike):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"


I = GaussianRational(0, 1)

Scalar = (int, Fraction, GaussianRational)


def demote(c):
    """Collapse a GaussianRational with zero imaginary part to a Fraction."""
    if isinstance(c, GaussianRational) and c.im == 0:
        return c.re
    return c


def scalar_re(c) -> Fraction:
    return c.re if isinstance(c, GaussianRational) else Fraction(c)


def scalar_im(c) -> Fraction:
    return c.im if isinstance(c, GaussianRational) else Fraction(0)


def scalar_mul_i(c, power: int):
    """Multiply scalar by i**power (power mod 4)."""
    power &= 3
    if power == 0:
        return c
    re, im = scalar_re(c), scalar_im(c)
    if power == 1:
        return demote(GaussianRational(-im, re))
    if power == 2:
        return demote(GaussianRational(-re, -im))
    return demote(GaussianRational(im, -re))


def content_of(scalars) -> Fraction:
    """Positive gcd-content of a collection of scalars (0 for empty/all-zero).

    content = gcd(all numerators) / lcm(all denominators) over both real and
    imaginary parts, so coefficient/content is always a ratio of integers
    with collective integer gcd 1.
    """
    num_gcd = 0
    den_lcm = 1
    for c in scalars:
        for part in (scalar_re(c), scalar_im(c)):
            if part == 0:
                continue
            num_gcd = gcd(num_gcd, abs(part.numerator))
            den_lcm = den_lcm * part.denominator // gcd(den_lcm, part.denominator)
    if num_gcd == 0:
        return Fraction(0)
    return Fraction(num_gcd, den_lcm)


@lru_cache(maxsize=None)
def falling_factorial_coeffs(j: int) -> tuple:
    """Coefficients (c_0..c_j) of y^k in the falling factorial y(y-1)...(y-j+1).

    These are the signed Stirling numbers of the first kind s(j, k).
    """
    if j == 0:
        return (Fraction(1),)
    prev = falling_factorial_coeffs(j - 1)
    out = [Fraction(0)] * (j + 1)
    # multiply prev by (y - (j-1))
    for k, c in enumerate(prev):
        out[k + 1] += c
        out[k] -= c * (j - 1)
    return tuple(out)


def falling_factorial(s: Fraction, j: int) -> Fraction:
    """Exact [s]_j = s (s-1) ... (s-j+1)."""
    out = Fraction(1)
    for l in range(j):
        out *= s - l
    return out


class PiPoly:
    """Laurent polynomial in pi with Fraction coefficients.

    Used for series coefficients: Frobenius coefficients live in Q[pi^2],
    asymptotic coefficients in Q[pi^-2].  Immutable by convention.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, _FracLike):
            terms = {0: Fraction(terms)} if terms else {}
        clean = {}
        for e, c in terms.items():
            c = Fraction(c)
            if c:
                clean[int(e)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PiPoly is immutable")

    @classmethod
    def monomial(cls, coeff, pi_power: int = 0) -> "PiPoly":
        return cls({pi_power: Fraction(coeff)})

    @classmethod
    def zero(cls) -> "PiPoly":
        return cls({})

    @classmethod
    def one(cls) -> "PiPoly":
        return cls({0: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if isinstance(other, _FracLike):
            other = PiPoly(other)
        if not isinstance(other, PiPoly):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return PiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return PiPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, PiPoly) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _FracLike):
            q = Fraction(other)
            return PiPoly({e: c * q for e, c in self.terms.items()})
        if not isinstance(other, PiPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return PiPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _FracLike):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, PiPoly):
            if len(other.terms) != 1:
                raise ValueError("PiPoly division only by a single pi-monomial")
            (e, c), = other.terms.items()
            return PiPoly({e1 - e: c1 / c for e1, c1 in self.terms.items()})
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, _FracLike):
            other = PiPoly(other)
        if not isinstance(other, PiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def single(self):
        """Return (pi_power, coefficient) if this is a single monomial."""
        if len(self.terms) != 1:
            raise ValueError(f"not a single pi-monomial: {self}")
        (e, c), = self.terms.items()
        return e, c

    def rational_part(self) -> Fraction:
        """Coefficient of pi^0 when the poly is pi-free (or zero)."""
        if not self.terms:
            return Fraction(0)
        if set(self.terms) != {0}:
            raise ValueError(f"not pi-free: {self}")
        return self.terms[0]

    def evalf(self, pi_value: float) -> float:
        return float(sum(float(c) * pi_value**e for e, c in self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*pi")
            else:
                parts.append(f"{c}*pi^{e}")
        return " + ".join(parts)
