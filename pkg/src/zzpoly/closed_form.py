"""Closed-form ZZ polynomials for parallelograms and ribbons.

The hypergeometric 2F1[-m, -n; 1; 1 + x] that appears for parallelograms
terminates, so it is evaluated as the finite binomial sum. All arithmetic is
exact.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import NonKekuleanError, ParameterError, UnsupportedParameterError
from .lattice import RibbonParams
from .poly import ONE, X, Polynomial, degree, evaluate, leading_coeff, poly_sum

_pascal = [[1]]
_pascal_lock = threading.Lock()


def binomial(n: int, k: int) -> int:
    """C(n, k) from a memoised Pascal triangle; 0 when k < 0 or k > n."""
    if k < 0 or n < 0 or k > n:
        return 0
    rows = _pascal
    if n >= len(rows):
        with _pascal_lock:
            rows = list(_pascal)
            while len(rows) <= n:
                prev = rows[-1]
                rows.append([1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1])
            # publish the extended table in one step
            _pascal[:] = rows
    return rows[n][k]


_one_plus_x_powers = [ONE]


def one_plus_x(j: int) -> Polynomial:
    """(1 + x)**j as a polynomial."""
    while len(_one_plus_x_powers) <= j:
        _one_plus_x_powers.append(_one_plus_x_powers[-1] * Polynomial((1, 1)))
    return _one_plus_x_powers[j]


def _ribbon_params(p) -> RibbonParams:
    if isinstance(p, RibbonParams):
        return p
    return RibbonParams(*p)


def zz_parallelogram(m: int, n: int) -> Polynomial:
    """ZZ(M(m, n)) = sum_j C(m, j) C(n, j) (1 + x)^j."""
    for name, v in (("m", m), ("n", n)):
        if not isinstance(v, int) or v < 0:
            raise ParameterError(name, v, "must be >= 0")
    return poly_sum(binomial(m, j) * binomial(n, j) * one_plus_x(j)
                    for j in range(min(m, n) + 1))


def zz_ribbon_closed(p) -> Polynomial:
    """Factored ribbon formula: single-bond and sextet classes of the
    central interface, each a product of two parallelogram polynomials."""
    n1, n2, m1, m2 = _ribbon_params(p).astuple()
    top = min(n1, m1)
    single = poly_sum(
        zz_parallelogram(m1 - k, n2 + k) * zz_parallelogram(m2 + k, n1 - k)
        for k in range(top + 1)
    )
    sextet = poly_sum(
        zz_parallelogram(m1 - k, n2 - 1 + k) * zz_parallelogram(m2 - 1 + k, n1 - k)
        for k in range(1, top + 1)
    )
    return single + X * sextet


def _triple(a, b, c, d):
    # sum_j C(a, j) C(b, j) * sum_i C(c, i) C(d, i), collected by (1+x)^(i+j)
    coeff = {}
    for j in range(a + 1):
        bj = binomial(a, j) * binomial(b, j)
        if not bj:
            continue
        for i in range(d + 1):
            ci = binomial(c, i) * binomial(d, i)
            if ci:
                coeff[i + j] = coeff.get(i + j, 0) + bj * ci
    return coeff


def _collect(coeff: dict) -> Polynomial:
    return poly_sum(c * one_plus_x(e) for e, c in sorted(coeff.items()))


def zz_ribbon_triple(p) -> Polynomial:
    """Expanded triple-sum form of the ribbon formula.

    Inner bounds: j runs to m1 - k (paired with n2 + k), i to n1 - k (paired
    with m2 + k). Used to cross-check :func:`zz_ribbon_closed`.
    """
    n1, n2, m1, m2 = _ribbon_params(p).astuple()
    top = min(n1, m1)
    first, second = {}, {}
    for k in range(top + 1):
        for e, c in _triple(m1 - k, n2 + k, m2 + k, n1 - k).items():
            first[e] = first.get(e, 0) + c
    for k in range(1, top + 1):
        for e, c in _triple(m1 - k, n2 - 1 + k, m2 - 1 + k, n1 - k).items():
            second[e] = second.get(e, 0) + c
    return _collect(first) + X * _collect(second)


def zz_ribbon_special(p) -> Polynomial:
    """The n1 = 1 and n1 = 2 recurrences, term by term."""
    p = _ribbon_params(p)
    n1, n2, m1, m2 = p.astuple()
    M = zz_parallelogram
    if n1 == 1:
        return (M(m1, n2) * M(m2, 1)
                + M(m1 - 1, n2 + 1)
                + X * M(m1 - 1, n2))
    if n1 == 2:
        # M(m1 - 2, .) does not exist for m1 = 1; the last two terms drop out
        terms = (M(m1, n2) * M(m2, 2)
                 + M(m1 - 1, n2 + 1) * M(m2 + 1, 1)
                 + X * M(m1 - 1, n2) * M(m2, 1))
        if m1 >= 2:
            # the sextet on the last two central edges leaves M(m1 - 2, n2 + 1)
            terms = terms + M(m1 - 2, n2 + 2) + X * M(m1 - 2, n2 + 1)
        return terms
    raise UnsupportedParameterError("n1", n1, "special-case formulas need n1 in {1, 2}")


def zz_v3(k: int, m: int, n: int) -> Polynomial:
    """ZZ(V(k, m, n)) with its own structural parameters (k = m1 = n1,
    m = m1 + m2, n = n1 + n2)."""
    RibbonParams(n1=k, n2=n - k, m1=k, m2=m - k)
    first, second = {}, {}
    for s in range(k + 1):
        for e, c in _triple(k - s, n - k + s, m - k + s, k - s).items():
            first[e] = first.get(e, 0) + c
    for s in range(1, k + 1):
        for e, c in _triple(k - s, n - k - 1 + s, m - k - 1 + s, k - s).items():
            second[e] = second.get(e, 0) + c
    return _collect(first) + X * _collect(second)


def zz_v4(k1: int, k2: int, m: int, n: int) -> Polynomial:
    """ZZ(V(k1, k2, m, n)) with k1 = n1, k2 = m1, m = m1 + m2, n = n1 + n2."""
    RibbonParams(n1=k1, n2=n - k1, m1=k2, m2=m - k2)
    first, second = {}, {}
    for k in range(min(k1, k2) + 1):
        for e, c in _triple(k2 - k, n - k1 + k, m - k2 + k, k1 - k).items():
            first[e] = first.get(e, 0) + c
    for k in range(1, min(k1, k2) + 1):
        for e, c in _triple(k2 - k, n - k1 - 1 + k, m - k2 - 1 + k, k1 - k).items():
            second[e] = second.get(e, 0) + c
    return _collect(first) + X * _collect(second)


def v3_params(k, m, n) -> RibbonParams:
    return RibbonParams(n1=k, n2=n - k, m1=k, m2=m - k)


def v4_params(k1, k2, m, n) -> RibbonParams:
    return RibbonParams(n1=k1, n2=n - k1, m1=k2, m2=m - k2)


def _ribbon_count(p, base: int) -> int:
    # (1 + x)^(i + j) at x = 0 or 1 is 1 or 2^(i + j)
    n1, n2, m1, m2 = _ribbon_params(p).astuple()
    top = min(n1, m1)

    def block(a, b, c, d):
        return sum(binomial(a, j) * binomial(b, j) * binomial(c, i) * binomial(d, i)
                   * base ** (i + j)
                   for j in range(a + 1) for i in range(d + 1))

    first = sum(block(m1 - k, n2 + k, m2 + k, n1 - k) for k in range(top + 1))
    if base == 1:
        return first
    return first + sum(block(m1 - k, n2 - 1 + k, m2 - 1 + k, n1 - k)
                       for k in range(1, top + 1))


def kekule_ribbon(p) -> int:
    return _ribbon_count(p, 1)


def clar_cover_count_ribbon(p) -> int:
    return _ribbon_count(p, 2)


def clar_number_formula(p) -> int:
    n1, n2, m1, m2 = _ribbon_params(p).astuple()
    top = min(m1, n1)
    cls = max(min(m1 - k, n2 + k) + min(n1 - k, m2 + k) for k in range(top + 1))
    clr = max(1 + min(m1 - k, n2 - 1 + k) + min(n1 - k, m2 - 1 + k)
              for k in range(1, top + 1))
    return max(cls, clr)


@dataclass(frozen=True)
class RibbonInvariants:
    zz: Polynomial
    kekule: int
    clar_covers: int
    clar_number: int
    clar_structures: int

    def to_json(self) -> dict:
        return {
            "zz": self.zz.to_json(),
            "kekule": str(self.kekule),
            "clar_covers": str(self.clar_covers),
            "clar_number": self.clar_number,
            "clar_structures": str(self.clar_structures),
        }


def invariants_from_zz(zz: Polynomial) -> RibbonInvariants:
    if not zz:
        raise NonKekuleanError("non-Kekulean structure: ZZ polynomial is 0")
    return RibbonInvariants(
        zz=zz,
        kekule=evaluate(zz, 0),
        clar_covers=evaluate(zz, 1),
        clar_number=degree(zz),
        clar_structures=leading_coeff(zz),
    )


def binid_check(v: int, b: int) -> bool:
    """sum_j C(b, j) C(v - b, j) == C(v, b)."""
    if b < 0 or b > v:
        raise ParameterError("b", b, f"must satisfy 0 <= b <= v={v}")
    lhs = sum(binomial(b, j) * binomial(v - b, j) for j in range(b + 1))
    return lhs == binomial(v, b)
