"""Exhaustive Clar-cover enumeration: the ground-truth oracle.

Covers are generated by repeatedly taking the least uncovered vertex in
(y, x) order and trying every way to cover it: a double bond to an uncovered
neighbour, or an aromatic sextet on an eligible face whose six vertices are
all still uncovered. Because the chosen vertex is always covered by exactly
one branch, every cover is emitted exactly once.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .lattice import as_graph, hex_vertices, make_edge, vertex_order
from .poly import Polynomial


@dataclass(frozen=True)
class ClarCover:
    double_bonds: frozenset
    aromatic_rings: frozenset

    @property
    def order(self) -> int:
        return len(self.aromatic_rings)

    def to_json(self) -> str:
        return json.dumps({
            "k2": [[list(a), list(b)] for a, b in sorted(self.double_bonds)],
            "c6": [list(h) for h in sorted(self.aromatic_rings)],
        })


def _search(g, allow_sextets: bool):
    order = sorted(g.vertices, key=vertex_order)
    adj = g.adjacency
    faces_at = {}
    if allow_sextets:
        for f in g.faces:
            for v in hex_vertices(f):
                faces_at.setdefault(v, []).append(f)
    covered = set()
    bonds = []
    rings = []

    def rec(pos):
        while pos < len(order) and order[pos] in covered:
            pos += 1
        if pos == len(order):
            yield bonds, rings
            return
        v = order[pos]
        covered.add(v)
        for w in adj[v]:
            if w in covered:
                continue
            covered.add(w)
            bonds.append(make_edge(v, w))
            yield from rec(pos + 1)
            bonds.pop()
            covered.discard(w)
        for f in faces_at.get(v, ()):
            ring = hex_vertices(f)
            if any(u in covered for u in ring if u != v):
                continue
            covered.update(ring)
            rings.append(f)
            yield from rec(pos + 1)
            rings.pop()
            covered.difference_update(ring)
            covered.add(v)
        covered.discard(v)

    return rec(0)


def enumerate_covers(b) -> Iterator[ClarCover]:
    """Yield every Clar cover of a benzenoid or cover graph once."""
    for bonds, rings in _search(as_graph(b), allow_sextets=True):
        yield ClarCover(frozenset(bonds), frozenset(rings))


def enumerate_kekule(b) -> Iterator[ClarCover]:
    for bonds, _ in _search(as_graph(b), allow_sextets=False):
        yield ClarCover(frozenset(bonds), frozenset())


def zz_brute(b) -> Polynomial:
    """ZZ polynomial by counting enumerated covers per sextet count."""
    counts = Counter(len(rings) for _, rings in _search(as_graph(b), True))
    if not counts:
        return Polynomial()
    return Polynomial(tuple(counts.get(k, 0) for k in range(max(counts) + 1)))


def kekule_count(b) -> int:
    return sum(1 for _ in _search(as_graph(b), allow_sextets=False))


def dump_covers(b, fh) -> int:
    """Write covers as JSON lines to ``fh``; returns the number written."""
    n = 0
    for cover in enumerate_covers(b):
        fh.write(cover.to_json() + "\n")
        n += 1
    return n


def is_valid_cover(b, cover: ClarCover) -> bool:
    """Exact-cover check of ``cover`` against ``b``."""
    g = as_graph(b)
    seen = set()
    for a, c in cover.double_bonds:
        if make_edge(a, c) not in g.edges or a in seen or c in seen:
            return False
        seen.update((a, c))
    for f in cover.aromatic_rings:
        if f not in g.faces:
            return False
        ring = hex_vertices(f)
        if not seen.isdisjoint(ring):
            return False
        seen.update(ring)
    return seen == set(g.vertices)
