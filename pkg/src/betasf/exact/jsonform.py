"""Canonical JSON encoding for exact objects.

Every encoder produces deterministically ordered plain data so that
json.dumps with sorted keys is byte-identical across runs.  Scalars are
kept as strings to avoid float round trips: a term is
[exponent_vector, numerator, denominator] with an integer numerator like
"3" or a Gaussian integer numerator like "3-2i".
"""

from __future__ import annotations

import json
from fractions import Fraction

from .diffop import DiffOperator
from .poly import VARS, Poly
from .scalars import GaussianRational, PiPoly
from .series import KINDS, FormalSeries


def encode_scalar(c):
    """Scalar -> (numerator string, denominator string)."""
    if isinstance(c, GaussianRational):
        if c.im == 0:
            c = c.re
        else:
            den = c.re.denominator * c.im.denominator // _gcd(
                c.re.denominator, c.im.denominator
            )
            a = c.re.numerator * (den // c.re.denominator)
            b = c.im.numerator * (den // c.im.denominator)
            num = f"{a}+{b}i" if b >= 0 else f"{a}-{-b}i"
            return num, str(den)
    c = Fraction(c)
    return str(c.numerator), str(c.denominator)


def decode_scalar(num: str, den: str):
    d = int(den)
    if num.endswith("i"):
        body = num[:-1]
        cut = max(body.rfind("+", 1), body.rfind("-", 1))
        a, b = int(body[:cut]), int(body[cut:])
        return GaussianRational(Fraction(a, d), Fraction(b, d))
    return Fraction(int(num), d)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def poly_to_data(p: Poly) -> dict:
    terms = []
    for exps, c in p.sorted_terms():
        num, den = encode_scalar(c)
        terms.append([list(exps), num, den])
    return {"vars": list(VARS), "terms": terms}


def poly_from_data(data: dict) -> Poly:
    if tuple(data["vars"]) != VARS:
        raise ValueError(f"variable set mismatch: {data['vars']}")
    return Poly({tuple(exps): decode_scalar(num, den)
                 for exps, num, den in data["terms"]})


def operator_to_data(op: DiffOperator) -> dict:
    return {
        "type": "diff_operator",
        "var": op.var,
        "order": op.order,
        "coeffs": [poly_to_data(c)["terms"] for c in op.coeffs],
    }


def operator_from_data(data: dict) -> DiffOperator:
    coeffs = [poly_from_data({"vars": list(VARS), "terms": t})
              for t in data["coeffs"]]
    return DiffOperator(data["var"], coeffs)


def pipoly_to_data(p: PiPoly) -> list:
    return [[e, str(c)] for e, c in sorted(p.terms.items())]


def pipoly_from_data(data) -> PiPoly:
    return PiPoly({int(e): Fraction(c) for e, c in data})


def series_to_data(s: FormalSeries) -> dict:
    return {
        "type": "formal_series",
        "kind": s.kind,
        "var": s.var,
        "exponent": str(s.exponent),
        "coeffs": [pipoly_to_data(c) for c in s.coeffs],
    }


def series_from_data(data: dict) -> FormalSeries:
    if data["kind"] not in KINDS:
        raise ValueError(f"unknown series kind {data['kind']!r}")
    return FormalSeries(
        data["kind"],
        data["var"],
        Fraction(data["exponent"]),
        tuple(pipoly_from_data(c) for c in data["coeffs"]),
    )


def to_data(obj):
    """Dispatch on object type; plain data passes through."""
    if isinstance(obj, Poly):
        return poly_to_data(obj)
    if isinstance(obj, DiffOperator):
        return operator_to_data(obj)
    if isinstance(obj, FormalSeries):
        return series_to_data(obj)
    if isinstance(obj, PiPoly):
        return pipoly_to_data(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    return obj


def dumps_canonical(data) -> str:
    """Compact, key-sorted JSON text (newline-terminated)."""
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"
