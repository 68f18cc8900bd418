import itertools

import pytest

from zzpoly.lattice import Benzenoid, HexCoord


def ribbon_tuples(lo, hi):
    return list(itertools.product(range(lo, hi + 1), repeat=4))


def naive_zz(b):
    """ZZ polynomial by testing every subset of edges and faces.

    Independent of the DFS enumerator; only usable for a handful of
    hexagons.
    """
    from zzpoly.lattice import hex_vertices
    from zzpoly.poly import Polynomial

    edges = sorted(b.edges)
    faces = sorted(b.faces)
    vertices = set(b.vertices)
    counts = {}
    items = [(set(e), 0) for e in edges] + [(set(hex_vertices(f)), 1) for f in faces]
    n = len(items)

    def rec(i, covered, rings):
        if i == n:
            if covered == vertices:
                counts[rings] = counts.get(rings, 0) + 1
            return
        rec(i + 1, covered, rings)
        vs, r = items[i]
        if covered.isdisjoint(vs):
            rec(i + 1, covered | vs, rings + r)

    rec(0, frozenset(), 0)
    if not counts:
        return Polynomial()
    return Polynomial(tuple(counts.get(k, 0) for k in range(max(counts) + 1)))


@pytest.fixture
def benzene():
    return Benzenoid(frozenset({HexCoord(0, 0)}))
