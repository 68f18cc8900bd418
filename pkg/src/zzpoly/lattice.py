"""Hexagonal-lattice geometry for benzenoids.

Hexagons live on an oblique lattice with coordinates ``(q, r)``: ``q`` steps
south-east and ``r`` steps south-west in the drawing, so ``q + r`` is the row
("depth") and ``(q + 1, r - 1)`` is the east neighbour in the same row.
Vertices use an integer brick embedding with ``y`` growing downwards:

    hexagon (q, r) has centre (X, Y) = (q - r, 3 * (q + r))
    and corners (X, Y-2), (X+1, Y-1), (X+1, Y+1), (X, Y+2), (X-1, Y+1), (X-1, Y-1)

Each hexagon has two vertical edges, at ``x = X - 1`` and ``x = X + 1``. All
vertical edges of row ``d`` sit in the band ``3d - 1 <= y <= 3d + 1``, so a
horizontal line through the row centre crosses exactly that row's vertical
edges.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, NamedTuple

from .errors import (
    CoordinateError,
    DuplicateHexagonError,
    EmptyBenzenoidError,
    MalformedDocumentError,
    ParameterError,
)


class HexCoord(NamedTuple):
    q: int
    r: int

    @property
    def depth(self) -> int:
        return self.q + self.r

    def neighbors(self):
        q, r = self
        return [
            HexCoord(q + 1, r), HexCoord(q - 1, r),  # SE, NW
            HexCoord(q, r + 1), HexCoord(q, r - 1),  # SW, NE
            HexCoord(q + 1, r - 1), HexCoord(q - 1, r + 1),  # E, W
        ]


def hex_center(h) -> tuple:
    q, r = h
    return (q - r, 3 * (q + r))


@lru_cache(maxsize=None)
def hex_vertices(h) -> tuple:
    """Corners of hexagon ``h`` clockwise from the top."""
    X, Y = hex_center(h)
    return (
        (X, Y - 2), (X + 1, Y - 1), (X + 1, Y + 1),
        (X, Y + 2), (X - 1, Y + 1), (X - 1, Y - 1),
    )


def make_edge(a, b) -> tuple:
    return (a, b) if a < b else (b, a)


@lru_cache(maxsize=None)
def hex_edges(h) -> tuple:
    vs = hex_vertices(h)
    return tuple(make_edge(vs[i], vs[(i + 1) % 6]) for i in range(6))


def is_vertical(e) -> bool:
    (x1, y1), (x2, y2) = e
    return x1 == x2


def vertex_order(v):
    """Sort key: top-to-bottom, then left-to-right."""
    return (v[1], v[0])


@dataclass(frozen=True)
class CoverGraph:
    """A vertex/edge subgraph of a benzenoid plus its sextet-eligible faces.

    A face is eligible only while all six of its edges are present; the
    ``delete_*`` methods keep that invariant.
    """

    vertices: frozenset
    edges: frozenset
    faces: frozenset

    @classmethod
    def make(cls, vertices, edges, faces=()) -> "CoverGraph":
        vertices = frozenset(vertices)
        edges = frozenset(e for e in edges if e[0] in vertices and e[1] in vertices)
        faces = frozenset(
            HexCoord(*f) for f in faces if all(e in edges for e in hex_edges(tuple(f)))
        )
        return cls(vertices, edges, faces)

    def __bool__(self):
        return bool(self.vertices)

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: [] for v in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def faces_with_edge(self, e):
        return [f for f in self.faces if e in hex_edges(f)]

    def faces_with_vertex(self, v):
        return [f for f in self.faces if v in hex_vertices(f)]

    def delete_edge(self, e) -> "CoverGraph":
        return CoverGraph(
            self.vertices,
            self.edges - {e},
            frozenset(f for f in self.faces if e not in hex_edges(f)),
        )

    def delete_vertices(self, vs) -> "CoverGraph":
        vs = set(vs)
        return CoverGraph(
            self.vertices - vs,
            frozenset(e for e in self.edges if e[0] not in vs and e[1] not in vs),
            frozenset(f for f in self.faces if vs.isdisjoint(hex_vertices(f))),
        )

    def components(self) -> list:
        """Connected components, ordered by their least vertex."""
        adj = self.adjacency
        seen = set()
        comps = []
        for start in sorted(self.vertices, key=vertex_order):
            if start in seen:
                continue
            seen.add(start)
            stack = [start]
            part = {start}
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        part.add(w)
                        stack.append(w)
            comps.append(part)
        if len(comps) <= 1:
            return [self]
        out = []
        for part in comps:
            out.append(CoverGraph(
                frozenset(part),
                frozenset(e for e in self.edges if e[0] in part),
                frozenset(f for f in self.faces if hex_vertices(f)[0] in part),
            ))
        return out


@dataclass(frozen=True)
class Benzenoid:
    hexagons: frozenset

    def __post_init__(self):
        object.__setattr__(
            self, "hexagons", frozenset(HexCoord(*h) for h in self.hexagons)
        )

    def __len__(self):
        return len(self.hexagons)

    @cached_property
    def vertices(self) -> frozenset:
        return frozenset(v for h in self.hexagons for v in hex_vertices(h))

    @cached_property
    def edges(self) -> frozenset:
        return frozenset(e for h in self.hexagons for e in hex_edges(h))

    @cached_property
    def faces(self) -> frozenset:
        edges = self.edges
        return frozenset(
            h for h in self.hexagons if all(e in edges for e in hex_edges(h))
        )

    def graph(self) -> CoverGraph:
        return CoverGraph(self.vertices, self.edges, self.faces)

    def rows(self) -> dict:
        """Map depth -> sorted list of hexagon centre x-coordinates."""
        rows = {}
        for h in self.hexagons:
            rows.setdefault(h.depth, []).append(h.q - h.r)
        return {d: sorted(xs) for d, xs in sorted(rows.items())}


EMPTY = Benzenoid(frozenset())


def as_graph(b) -> CoverGraph:
    return b.graph() if isinstance(b, Benzenoid) else b


def _check_positive(**params):
    for name, value in params.items():
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ParameterError(name, value)


def _check_nonnegative(**params):
    for name, value in params.items():
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ParameterError(name, value, "must be >= 0")


@dataclass(frozen=True)
class ParallelogramParams:
    m: int
    n: int

    def __post_init__(self):
        _check_nonnegative(m=self.m, n=self.n)


@dataclass(frozen=True)
class RibbonParams:
    n1: int
    n2: int
    m1: int
    m2: int

    def __post_init__(self):
        _check_positive(n1=self.n1, n2=self.n2, m1=self.m1, m2=self.m2)

    def astuple(self) -> tuple:
        return (self.n1, self.n2, self.m1, self.m2)

    @property
    def hexagon_count(self) -> int:
        return self.m1 * (self.n1 + self.n2) + self.m2 * self.n1

    @property
    def fragment_count(self) -> int:
        return self.m1 + self.n2 + self.m2 + self.n1


def build_parallelogram(m, n=None) -> Benzenoid:
    p = m if isinstance(m, ParallelogramParams) else ParallelogramParams(m, n)
    return Benzenoid(frozenset(HexCoord(q, r) for q in range(p.m) for r in range(p.n)))


def build_ribbon(*args) -> Benzenoid:
    """Ribbon Rb(n1, n2, m1, m2): an ``m1 x (n1 + n2)`` parallelogram with an
    ``m2 x n1`` parallelogram attached along the bottom ``n1`` SW-rows."""
    p = args[0] if len(args) == 1 and isinstance(args[0], RibbonParams) else RibbonParams(*args)
    n1, n2, m1, m2 = p.astuple()
    upper = {HexCoord(q, r) for q in range(m1) for r in range(n1 + n2)}
    lower = {HexCoord(q, r) for q in range(m1 + m2) for r in range(n2, n1 + n2)}
    return Benzenoid(frozenset(upper | lower))


def translate(b: Benzenoid, dq: int, dr: int) -> Benzenoid:
    return Benzenoid(frozenset(HexCoord(q + dq, r + dr) for q, r in b.hexagons))


def mirror(b: Benzenoid) -> Benzenoid:
    """Reflect across a horizontal axis: ``(q, r) -> (-r, -q)``.

    This keeps x and negates y, so row order is reversed. It maps
    Rb(n1, n2, m1, m2) onto a translate of Rb(m1, m2, n1, n2) and M(m, n)
    onto a translate of M(n, m).
    """
    return Benzenoid(frozenset(HexCoord(-r, -q) for q, r in b.hexagons))


def normalize_hexagons(hexagons) -> list:
    """Hexagon list translated so min q and min r are 0, sorted."""
    hexagons = list(hexagons)
    if not hexagons:
        return []
    mq = min(h[0] for h in hexagons)
    mr = min(h[1] for h in hexagons)
    return sorted((q - mq, r - mr) for q, r in hexagons)


def _translation_for(vertices):
    # Lattice translations move vertices by (a - b, 3 * (a + b)); pick the
    # unique one putting min y in [0, 3) and min x in {0, 1}.
    min_y = min(v[1] for v in vertices)
    min_x = min(v[0] for v in vertices)
    s = min_y // 3
    dx = -min_x + ((s + min_x) % 2)
    dy = -3 * s
    dq = (dx - s) // 2
    dr = (-s - dx) // 2
    return dx, dy, dq, dr


def canonicalize(g) -> bytes:
    """Translation-invariant key of a benzenoid or cover graph.

    Mirror images get different keys on purpose.
    """
    g = as_graph(g)
    if not g.vertices:
        return b"empty"
    dx, dy, dq, dr = _translation_for(g.vertices)
    vs = sorted((x + dx, y + dy) for x, y in g.vertices)
    es = sorted(((a[0] + dx, a[1] + dy), (b[0] + dx, b[1] + dy)) for a, b in g.edges)
    fs = sorted((q + dq, r + dr) for q, r in g.faces)
    return repr((vs, es, fs)).encode("ascii")


def parse_benzenoid(doc) -> Benzenoid:
    """Build a benzenoid from ``{"hexagons": [[q, r], ...]}``.

    ``doc`` may be a JSON string/bytes or an already-decoded dict.
    """
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise MalformedDocumentError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict) or not isinstance(doc.get("hexagons"), list):
        raise MalformedDocumentError('expected an object with a "hexagons" array')
    seen = set()
    for item in doc["hexagons"]:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(c, int) and not isinstance(c, bool) for c in item)
        ):
            raise CoordinateError(f"hexagon {item!r} is not an integer pair")
        h = HexCoord(*item)
        if h in seen:
            raise DuplicateHexagonError(f"duplicate hexagon {list(h)}")
        seen.add(h)
    if not seen:
        raise EmptyBenzenoidError("hexagon list is empty")
    return Benzenoid(frozenset(seen))


def serialize_benzenoid(b: Benzenoid) -> str:
    return json.dumps({"hexagons": [list(h) for h in sorted(b.hexagons)]})


def benzenoid_from_hexagons(hexagons: Iterable) -> Benzenoid:
    return Benzenoid(frozenset(HexCoord(*h) for h in hexagons))
