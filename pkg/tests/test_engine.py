import random

import pytest

from zzpoly.clar_enum import enumerate_covers, zz_brute
from zzpoly.closed_form import zz_ribbon_closed
from zzpoly.engine import Decomposer, branch_graphs, reduce_forced, select_edge, zz_decompose
from zzpoly.lattice import (
    CoverGraph, build_parallelogram, build_ribbon, canonicalize, make_edge,
    parse_benzenoid, translate,
)
from zzpoly.poly import ONE, ZERO, Polynomial

from conftest import ribbon_tuples


def path(n):
    vs = [(0, 2 * i) for i in range(n)]
    return CoverGraph.make(vs, [make_edge(a, b) for a, b in zip(vs, vs[1:])])


def test_benzene(benzene):
    assert zz_decompose(benzene) == Polynomial((2, 1))


def test_select_edge_benzene_west(benzene):
    e = select_edge(benzene.graph())
    assert e == ((-1, -1), (-1, 1))


def test_select_edge_after_double_branch(benzene):
    g = benzene.graph()
    rest = g.delete_vertices(select_edge(g))
    assert len(rest.vertices) == 4 and len(rest.edges) == 3
    # still has the east vertical edge, which the rule prefers
    assert select_edge(rest) == ((1, -1), (1, 1))
    reduced, _, ok = reduce_forced(rest)
    assert ok and not reduced.vertices
    assert select_edge(reduced) is None


def test_select_edge_without_verticals():
    g = CoverGraph.make([(0, 0), (1, 1), (2, 0)], [((0, 0), (1, 1)), ((1, 1), (2, 0))])
    assert select_edge(g) == ((0, 0), (1, 1))


def test_reduce_forced_paths():
    g, mult, ok = reduce_forced(path(2))
    assert ok and not g.vertices and mult == ONE
    _, _, ok = reduce_forced(path(3))
    assert not ok
    _, _, ok = reduce_forced(path(6))
    assert ok


def test_isolated_vertex_is_zero():
    g = CoverGraph.make([(0, 0)], [])
    assert zz_decompose(g) == ZERO


def test_empty_is_one():
    assert zz_decompose(CoverGraph.make([], [])) == ONE


@pytest.mark.parametrize("t", ribbon_tuples(1, 3))
def test_engine_equals_brute(t):
    b = build_ribbon(*t)
    assert zz_decompose(b) == zz_brute(b) == zz_ribbon_closed(t)


def test_big_ribbon_matches_closed_form():
    assert zz_decompose(build_ribbon(3, 6, 5, 4)) == zz_ribbon_closed((3, 6, 5, 4))


@pytest.mark.parametrize("t", [(1, 1, 1, 1), (2, 1, 1, 2), (2, 2, 1, 1), (1, 2, 2, 2)])
def test_memo_transparency(t):
    b = build_ribbon(*t)
    assert Decomposer(memo=True).run(b) == Decomposer(memo=False).run(b)
    assert Decomposer(split_components=False).run(b) == zz_decompose(b)


def test_translation_invariance():
    b = build_ribbon(2, 1, 2, 1)
    moved = translate(b, 7, -3)
    assert canonicalize(b) == canonicalize(moved)
    assert zz_decompose(moved) == zz_decompose(b)


def _random_subgraphs(rng, count):
    sources = [build_parallelogram(2, 2), build_ribbon(1, 1, 1, 1), build_ribbon(2, 1, 1, 1),
               build_parallelogram(3, 1), build_ribbon(1, 2, 1, 2)]
    for _ in range(count):
        g = rng.choice(sources).graph()
        assert len(g.vertices) <= 30
        for _ in range(rng.randint(0, 3)):
            if rng.random() < 0.5 and g.edges:
                g = g.delete_edge(rng.choice(sorted(g.edges)))
            elif g.vertices:
                g = g.delete_vertices([rng.choice(sorted(g.vertices))])
        yield g


def test_random_deletions_match_brute():
    rng = random.Random(2024)
    for g in _random_subgraphs(rng, 150):
        assert zz_decompose(g) == zz_brute(g)
        assert zz_decompose(g, memo=False) == zz_brute(g)


@pytest.mark.parametrize("t", [(1, 1, 1, 1), (2, 1, 1, 2), (2, 2, 2, 1)])
def test_branch_soundness(t):
    g = build_ribbon(*t).graph()
    e = select_edge(g)
    single, double, rings = branch_graphs(g, e)
    ring_faces = g.faces_with_edge(e)
    classes = {"single": 0, "double": 0, "ring": 0}
    for c in enumerate_covers(g):
        in_bond = e in c.double_bonds
        in_ring = any(f in c.aromatic_rings for f in ring_faces)
        assert not (in_bond and in_ring)
        classes["double" if in_bond else "ring" if in_ring else "single"] += 1
    from zzpoly.poly import evaluate

    assert classes["single"] == evaluate(zz_brute(single), 1)
    assert classes["double"] == evaluate(zz_brute(double), 1)
    assert classes["ring"] == sum(evaluate(zz_brute(r), 1) for r in rings)


def test_cache_stats_recorded():
    d = Decomposer()
    d.run(build_ribbon(2, 2, 2, 2))
    assert d.stats.misses > 0 and d.stats.hits > 0 and d.stats.max_depth > 1


def test_deep_structure_does_not_hit_recursion_limit():
    # a long chain forces deep branching without a recursive call stack
    b = parse_benzenoid({"hexagons": [[q, 0] for q in range(200)]})
    zz = zz_decompose(b)
    assert zz(0) == 201

