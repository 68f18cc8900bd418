"""Dense univariate polynomials with nonnegative integer coefficients.

Coefficients are Python ints, so Kekule and Clar-cover counts never overflow.
``coeffs[k]`` is the coefficient of ``x**k``; the zero polynomial stores an
empty tuple and has degree ``NEG_INF``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError, ZeroPolynomialError

NEG_INF = -math.inf


def _strip(coeffs: Sequence[int]) -> tuple:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple = ()

    def __post_init__(self):
        cs = _strip(tuple(self.coeffs))
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficient {c!r} is not an integer")
            if c < 0:
                raise ValueError(f"negative coefficient {c}")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Polynomial":
        return cls((0,) * k + (c,))

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, t: int) -> int:
        return evaluate(self, t)

    @property
    def degree(self):
        return degree(self)

    def to_text(self, descending: bool = False) -> str:
        return to_text(self, descending)

    def __str__(self):
        return to_text(self)

    def to_json(self) -> list:
        return [str(c) for c in self.coeffs]


ZERO = Polynomial()
ONE = Polynomial((1,))
X = Polynomial((0, 1))


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    out = list(a.coeffs)
    for k, c in enumerate(b.coeffs):
        out[k] += c
    return Polynomial(tuple(out))


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    if not a.coeffs or not b.coeffs:
        return ZERO
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca:
            for j, cb in enumerate(b.coeffs):
                out[i + j] += ca * cb
    return Polynomial(tuple(out))


def poly_sum(polys: Iterable[Polynomial]) -> Polynomial:
    total = ZERO
    for p in polys:
        total = add(total, p)
    return total


def evaluate(p: Polynomial, t: int) -> int:
    """Horner evaluation at a nonnegative integer."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def degree(p: Polynomial):
    """Index of the highest nonzero coefficient, ``NEG_INF`` for zero."""
    if not p.coeffs:
        return NEG_INF
    return len(p.coeffs) - 1


def leading_coeff(p: Polynomial) -> int:
    if not p.coeffs:
        raise ZeroPolynomialError("no leading coefficient: zero polynomial")
    return p.coeffs[-1]


def _term(c: int, k: int) -> str:
    if k == 0:
        return str(c)
    mono = "x" if k == 1 else f"x^{k}"
    return mono if c == 1 else f"{c} {mono}"


def to_text(p: Polynomial, descending: bool = False) -> str:
    """Render as ``c0 + c1 x + c2 x^2`` (zero terms omitted)."""
    terms = [(k, c) for k, c in enumerate(p.coeffs) if c]
    if not terms:
        return "0"
    if descending:
        terms.reverse()
    return " + ".join(_term(c, k) for k, c in terms)


def to_json(p: Polynomial) -> str:
    return json.dumps(p.to_json())


def from_json(doc) -> Polynomial:
    """Inverse of :func:`to_json`; accepts a JSON string or a decoded list.

    Coefficients may be decimal strings (the canonical form) or integers.
    """
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed polynomial JSON: {exc}") from exc
    if not isinstance(doc, list):
        raise ParseError("polynomial JSON must be an array")
    coeffs = []
    for c in doc:
        if isinstance(c, str) and c.isdigit():
            coeffs.append(int(c))
        elif isinstance(c, int) and not isinstance(c, bool) and c >= 0:
            coeffs.append(c)
        else:
            raise ParseError(f"bad coefficient {c!r}")
    return Polynomial(tuple(coeffs))
