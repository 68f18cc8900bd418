import random

import pytest

from zzpoly.clar_enum import (
    ClarCover, dump_covers, enumerate_covers, enumerate_kekule, is_valid_cover,
    kekule_count, zz_brute,
)
from zzpoly.lattice import EMPTY, build_parallelogram, build_ribbon, mirror
from zzpoly.poly import ZERO, Polynomial, degree, evaluate

from conftest import naive_zz

PHENANTHRENE = Polynomial((5, 5, 1))


@pytest.mark.parametrize("b", [
    build_parallelogram(1, 1),
    build_parallelogram(2, 1),
    build_parallelogram(1, 3),
    build_ribbon(1, 1, 1, 1),
])
def test_brute_matches_subset_oracle(b):
    assert zz_brute(b) == naive_zz(b)


def test_benzene_covers(benzene):
    covers = list(enumerate_covers(benzene))
    assert len(covers) == 3
    assert sorted(c.order for c in covers) == [0, 0, 1]
    assert zz_brute(benzene) == Polynomial((2, 1))


def test_phenanthrene():
    b = build_ribbon(1, 1, 1, 1)
    assert len(list(enumerate_covers(b))) == 11
    assert zz_brute(b) == PHENANTHRENE
    assert kekule_count(b) == 5


def test_naphthalene():
    assert zz_brute(build_parallelogram(2, 1)) == Polynomial((3, 2))


def test_empty_is_one():
    assert zz_brute(EMPTY) == Polynomial((1,))


def test_vertex_deleted_benzene_has_no_cover(benzene):
    g = benzene.graph()
    g = g.delete_vertices([min(g.vertices)])
    assert list(enumerate_covers(g)) == []
    assert zz_brute(g) == ZERO
    assert kekule_count(g) == 0


@pytest.mark.parametrize("b", [build_ribbon(2, 1, 1, 2), build_parallelogram(2, 3)])
def test_every_cover_is_exact_and_unique(b):
    covers = list(enumerate_covers(b))
    assert len(set(covers)) == len(covers)
    for c in covers:
        assert is_valid_cover(b, c)


def test_invalid_cover_rejected(benzene):
    assert not is_valid_cover(benzene, ClarCover(frozenset(), frozenset()))


@pytest.mark.parametrize("t", [(1, 1, 1, 1), (2, 1, 1, 2), (1, 2, 2, 1), (2, 2, 2, 1)])
def test_kekule_count_is_constant_term(t):
    b = build_ribbon(*t)
    zz = zz_brute(b)
    assert evaluate(zz, 0) == kekule_count(b) == len(list(enumerate_kekule(b)))
    assert all(c >= 0 for c in zz.coeffs)
    assert degree(zz) <= len(b.faces)


@pytest.mark.parametrize("t", [(1, 2, 1, 1), (2, 1, 3, 1), (1, 1, 2, 2)])
def test_mirror_invariance(t):
    b = build_ribbon(*t)
    assert zz_brute(mirror(b)) == zz_brute(b)


def test_random_subgraphs_match_subset_oracle():
    rng = random.Random(7)
    b = build_ribbon(1, 1, 1, 1)
    for _ in range(20):
        g = b.graph()
        for e in rng.sample(sorted(g.edges), rng.randint(0, 3)):
            g = g.delete_edge(e)
        assert zz_brute(g) == naive_zz_graph(g)


def naive_zz_graph(g):
    class Shim:
        pass

    s = Shim()
    s.edges, s.faces, s.vertices = g.edges, g.faces, g.vertices
    return naive_zz(s)


def test_dump_covers(tmp_path, benzene):
    import json

    path = tmp_path / "covers.jsonl"
    with open(path, "w") as fh:
        assert dump_covers(benzene, fh) == 3
    lines = [json.loads(line) for line in path.read_text().splitlines()]
    assert sum(1 for d in lines if d["c6"] == [[0, 0]]) == 1
    assert all(len(d["k2"]) == 3 for d in lines if not d["c6"])
