import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from zzpoly.clar_enum import zz_brute
from zzpoly.closed_form import (
    binid_check, binomial, clar_cover_count_ribbon, clar_number_formula,
    invariants_from_zz, kekule_ribbon, v4_params, zz_parallelogram,
    zz_ribbon_closed, zz_ribbon_special, zz_ribbon_triple, zz_v3, zz_v4,
)
from zzpoly.errors import NonKekuleanError, ParameterError, UnsupportedParameterError
from zzpoly.lattice import build_parallelogram, build_ribbon
from zzpoly.poly import ONE, Polynomial, degree, evaluate

from conftest import ribbon_tuples

PHENANTHRENE = Polynomial((5, 5, 1))


@pytest.mark.parametrize("n", range(0, 16))
def test_binomial_matches_math_comb(n):
    for k in range(-2, n + 3):
        assert binomial(n, k) == (comb(n, k) if 0 <= k <= n else 0)


def test_parallelogram_examples():
    assert zz_parallelogram(5, 0) == ONE
    assert zz_parallelogram(0, 0) == ONE
    assert zz_parallelogram(1, 1) == Polynomial((2, 1))
    # pyrene
    assert zz_parallelogram(2, 2) == Polynomial((6, 6, 1)) == zz_brute(build_parallelogram(2, 2))


@pytest.mark.parametrize("m, n", list(itertools.product(range(5), repeat=2)))
def test_parallelogram_against_brute(m, n):
    assert zz_parallelogram(m, n) == zz_parallelogram(n, m) == zz_brute(build_parallelogram(m, n))


@pytest.mark.parametrize("m, n", list(itertools.product(range(1, 7), repeat=2)))
def test_parallelogram_degree(m, n):
    assert degree(zz_parallelogram(m, n)) == min(m, n)


def test_ribbon_examples():
    assert zz_ribbon_closed((1, 1, 1, 1)) == PHENANTHRENE
    assert zz_ribbon_closed((2, 1, 1, 2)) == Polynomial((16, 24, 10, 1))
    assert zz_ribbon_closed((2, 1, 1, 2)) == zz_brute(build_ribbon(2, 1, 1, 2))


@pytest.mark.parametrize("t", ribbon_tuples(1, 3))
def test_ribbon_closed_equals_brute(t):
    assert zz_ribbon_closed(t) == zz_brute(build_ribbon(*t))


@pytest.mark.parametrize("t", ribbon_tuples(1, 4))
def test_factored_equals_triple_and_symmetric(t):
    n1, n2, m1, m2 = t
    zz = zz_ribbon_closed(t)
    assert zz == zz_ribbon_triple(t)
    assert zz == zz_ribbon_closed((m1, m2, n1, n2))


def test_special_phenanthrene():
    assert zz_ribbon_special((1, 1, 1, 1)) == Polynomial((2, 1)) ** 2 + Polynomial((1, 1))
    assert zz_ribbon_special((1, 1, 1, 1)) == PHENANTHRENE


@pytest.mark.parametrize("n1", [1, 2])
@pytest.mark.parametrize("rest", list(itertools.product(range(1, 4), repeat=3)))
def test_special_equals_closed(n1, rest):
    t = (n1, *rest)
    assert zz_ribbon_special(t) == zz_ribbon_closed(t)


@pytest.mark.parametrize("n2, m1, m2", [(1, 3, 1), (2, 3, 1), (1, 4, 2)])
def test_n1_2_last_sextet_term_uses_n2_plus_1(n2, m1, m2):
    from zzpoly.poly import X

    M = zz_parallelogram
    t = (2, n2, m1, m2)
    brute = zz_brute(build_ribbon(*t))
    assert zz_ribbon_special(t) == brute
    head = (M(m1, n2) * M(m2, 2) + M(m1 - 1, n2 + 1) * M(m2 + 1, 1)
            + X * M(m1 - 1, n2) * M(m2, 1) + M(m1 - 2, n2 + 2))
    assert head + X * M(m1 - 2, n2) != brute
    assert head + X * M(m1 - 2, n2 + 1) == brute


def test_special_rejects_other_n1():
    with pytest.raises(UnsupportedParameterError):
        zz_ribbon_special((3, 1, 1, 1))


def test_v3_examples():
    assert zz_v3(1, 2, 2) == PHENANTHRENE
    with pytest.raises(ParameterError):
        zz_v3(3, 2, 2)


@pytest.mark.parametrize("k, m, n", [(k, m, n) for k in range(1, 4)
                                     for m in range(k + 1, k + 4) for n in range(k + 1, k + 4)])
def test_v3_is_ribbon(k, m, n):
    assert zz_v3(k, m, n) == zz_ribbon_closed((k, n - k, k, m - k))


@pytest.mark.parametrize("t", ribbon_tuples(1, 3))
def test_v4_is_ribbon(t):
    n1, n2, m1, m2 = t
    assert zz_v4(n1, m1, m1 + m2, n1 + n2) == zz_ribbon_closed(t)
    assert v4_params(n1, m1, m1 + m2, n1 + n2).astuple() == t


def test_counts_phenanthrene():
    assert kekule_ribbon((1, 1, 1, 1)) == 5
    assert clar_cover_count_ribbon((1, 1, 1, 1)) == 11


@pytest.mark.parametrize("t", ribbon_tuples(1, 4))
def test_counts_match_polynomial(t):
    zz = zz_ribbon_closed(t)
    assert kekule_ribbon(t) == evaluate(zz, 0)
    assert clar_cover_count_ribbon(t) == evaluate(zz, 1)
    assert clar_number_formula(t) == degree(zz)


def test_clar_number_examples():
    assert clar_number_formula((1, 1, 1, 1)) == 2
    assert clar_number_formula((2, 1, 1, 2)) == 3


@pytest.mark.parametrize("t", ribbon_tuples(1, 3))
def test_clar_number_against_brute(t):
    assert clar_number_formula(t) == degree(zz_brute(build_ribbon(*t)))


def test_invariants():
    inv = invariants_from_zz(PHENANTHRENE)
    assert (inv.kekule, inv.clar_covers, inv.clar_number, inv.clar_structures) == (5, 11, 2, 1)
    inv = invariants_from_zz(ONE)
    assert (inv.kekule, inv.clar_covers, inv.clar_number, inv.clar_structures) == (1, 1, 0, 1)
    with pytest.raises(NonKekuleanError):
        invariants_from_zz(Polynomial())


def test_binid_examples():
    assert binid_check(5, 2)
    assert sum(binomial(2, j) * binomial(3, j) for j in range(3)) == 10 == binomial(5, 2)
    assert binid_check(0, 0)
    with pytest.raises(ParameterError):
        binid_check(3, 4)


@given(st.integers(min_value=0, max_value=40).flatmap(
    lambda v: st.tuples(st.just(v), st.integers(min_value=0, max_value=v))))
def test_binid_property(vb):
    assert binid_check(*vb)
