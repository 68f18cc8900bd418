"""Recursive S/D/R edge decomposition of ZZ polynomials with memoization.

For a selected edge e = {u, v} of a cover graph g, every Clar cover either
leaves e unused, uses it as a double bond, or has it inside a sextet:

    ZZ(g) = ZZ(g - e) + ZZ(g - {u, v}) + x * sum_h ZZ(g - V(h))

where h runs over the (at most two) eligible faces containing e. Before each
split, degree-1 vertices are resolved as forced double bonds, and the graph is
factored into connected components. Connected pieces are memoized under their
translation-normalized key, so translated copies of the same fragment share a
single cache entry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import CoverGraph, as_graph, canonicalize, hex_vertices, is_vertical
from .poly import ONE, X, ZERO, Polynomial


def reduce_forced(g: CoverGraph):
    """Resolve forced double bonds.

    Returns ``(reduced_graph, multiplier, feasible)``. A degree-0 vertex makes
    the graph infeasible; a degree-1 vertex forces its only edge to be a
    double bond, deleting both endpoints. Forced bonds carry weight 1, so the
    multiplier is always ``ONE``.
    """
    adj = {v: set(ws) for v, ws in g.adjacency.items()}
    queue = [v for v, ws in adj.items() if len(ws) <= 1]
    if not queue:
        return g, ONE, True
    removed = set()
    while queue:
        v = queue.pop()
        if v in removed:
            continue
        ws = adj[v]
        if not ws:
            return g, ONE, False
        if len(ws) > 1:
            continue
        (w,) = ws
        for u in (v, w):
            removed.add(u)
            for t in adj.pop(u):
                if t in adj:
                    adj[t].discard(u)
                    if len(adj[t]) <= 1:
                        queue.append(t)
    return g.delete_vertices(removed), ONE, True


def select_edge(g: CoverGraph):
    """Topmost vertical edge (leftmost on ties), else the least edge.

    Returns None for an edgeless graph.
    """
    best = None
    for e in g.edges:
        if is_vertical(e):
            key = (e[0][1], e[0][0])
            if best is None or key < best[0]:
                best = (key, e)
    if best is not None:
        return best[1]
    if not g.edges:
        return None
    return min(g.edges)


@dataclass
class CacheStats:
    hits: int = 0
    misses: int = 0
    max_depth: int = 0

    def as_dict(self) -> dict:
        return {"hits": self.hits, "misses": self.misses, "max_depth": self.max_depth}


class Decomposer:
    """Evaluates ZZ polynomials by S/D/R decomposition.

    The recursion runs on an explicit stack of generators, so depth is bounded
    by memory rather than the interpreter's recursion limit. With
    ``memo=False`` every subproblem is recomputed.
    """

    def __init__(self, memo: bool = True, split_components: bool = True):
        self.cache = {} if memo else None
        self.split_components = split_components
        self.stats = CacheStats()

    def _solve(self, g: CoverGraph):
        g, _, feasible = reduce_forced(g)
        if not feasible:
            return ZERO
        if not g.vertices:
            return ONE
        if self.split_components:
            parts = g.components()
            if len(parts) > 1:
                result = ONE
                for part in parts:
                    sub = yield part
                    if not sub:
                        return ZERO
                    result = result * sub
                return result
        key = None
        if self.cache is not None:
            key = canonicalize(g)
            hit = self.cache.get(key)
            if hit is not None:
                self.stats.hits += 1
                return hit
            self.stats.misses += 1

        e = select_edge(g)
        if e is None:
            return ZERO
        rings = ZERO
        for f in g.faces_with_edge(e):
            rings = rings + (yield g.delete_vertices(hex_vertices(f)))
        single = yield g.delete_edge(e)
        double = yield g.delete_vertices(e)
        result = single + double + X * rings
        if key is not None:
            self.cache[key] = result
        return result

    def run(self, g) -> Polynomial:
        g = as_graph(g)
        stack = [self._solve(g)]
        value = None
        while stack:
            try:
                child = stack[-1].send(value)
            except StopIteration as done:
                stack.pop()
                value = done.value
                continue
            stack.append(self._solve(child))
            value = None
            if len(stack) > self.stats.max_depth:
                self.stats.max_depth = len(stack)
        return value


def zz_decompose(g, memo: bool = True) -> Polynomial:
    return Decomposer(memo=memo).run(g)


def branch_graphs(g: CoverGraph, e):
    """The three branch families for edge ``e``: (single, double, [rings])."""
    return (
        g.delete_edge(e),
        g.delete_vertices(e),
        [g.delete_vertices(hex_vertices(f)) for f in g.faces_with_edge(e)],
    )
