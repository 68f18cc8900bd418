"""Interfaces, fragment shapes and covering orders of benzenoids.

Interface ``i_{j+1}`` is the layer of vertical edges of hexagon row ``j``
(counting rows from the top, starting at 0); ``i_0`` and ``i_F`` are the empty
interfaces above and below the structure. Fragment ``f_k`` lies between
``i_{k-1}`` and ``i_k`` and is classified by where its leftmost and rightmost
vertical edges sit:

    W  both in the lower interface      (order rises by 1)
    N  both in the upper interface      (order falls by 1)
    R  leftmost upper, rightmost lower  (order unchanged)
    L  leftmost lower, rightmost upper  (order unchanged)

Edge covering orders are kept in half units (2 = double bond, 1 = sextet
edge, 0 = unused) so sums stay exact integers.

With the lattice used here, M(2, 1) has shape ``WRN``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from .clar_enum import ClarCover, enumerate_covers, is_valid_cover
from .closed_form import zz_parallelogram
from .engine import reduce_forced
from .errors import (
    InvalidCoverError,
    ShapeInconsistencyError,
    TheoremViolationError,
    UnsupportedGeometryError,
)
from .lattice import (
    Benzenoid,
    ParallelogramParams,
    RibbonParams,
    build_ribbon,
    hex_edges,
    hex_vertices,
    make_edge,
)
from .poly import ONE, X, Polynomial, poly_sum

_DELTA = {"W": 1, "N": -1, "R": 0, "L": 0}


def _row_spans(b: Benzenoid) -> list:
    """(left, right) x-extent of each row's vertical edges, top to bottom."""
    if not b.hexagons:
        raise UnsupportedGeometryError("empty benzenoid has no interfaces")
    rows = b.rows()
    depths = list(rows)
    if depths != list(range(depths[0], depths[-1] + 1)):
        raise UnsupportedGeometryError("hexagon rows are not consecutive")
    spans = []
    for d, xs in rows.items():
        if any(b2 - a != 2 for a, b2 in zip(xs, xs[1:])):
            raise UnsupportedGeometryError(f"row at depth {d} is not a contiguous chain")
        spans.append((xs[0] - 1, xs[-1] + 1))
    return spans


def interface_edges(b: Benzenoid) -> list:
    """Vertical edges of every interface ``i_0 .. i_F``, left to right."""
    rows = b.rows()
    _row_spans(b)
    out = [[]]
    for d, xs in rows.items():
        xs_edges = sorted({x - 1 for x in xs} | {x + 1 for x in xs})
        out.append([((x, 3 * d - 1), (x, 3 * d + 1)) for x in xs_edges])
    out.append([])
    return out


def fragment_shapes(b: Benzenoid) -> str:
    spans = [None] + _row_spans(b) + [None]
    shapes = []
    for upper, lower in zip(spans, spans[1:]):
        if upper is None:
            shapes.append("W")
            continue
        if lower is None:
            shapes.append("N")
            continue
        first_lower = lower[0] < upper[0]
        last_lower = lower[1] > upper[1]
        if first_lower and last_lower:
            shapes.append("W")
        elif not first_lower and not last_lower:
            shapes.append("N")
        elif last_lower:
            shapes.append("R")
        else:
            shapes.append("L")
    return "".join(shapes)


def fold_orders(shapes: str) -> list:
    orders = [0]
    for s in shapes:
        orders.append(orders[-1] + _DELTA[s])
    if orders[-1] != 0:
        raise ShapeInconsistencyError(f"order fold of {shapes} ends at {orders[-1]}")
    return orders


def interface_orders(b: Benzenoid) -> list:
    return fold_orders(fragment_shapes(b))


@dataclass(frozen=True)
class InterfaceReport:
    shapes: str
    orders: tuple
    edge_counts: tuple

    def to_json(self) -> str:
        return json.dumps({
            "shapes": self.shapes,
            "orders": list(self.orders),
            "edge_counts": list(self.edge_counts),
        })

    @classmethod
    def from_json(cls, text: str) -> "InterfaceReport":
        doc = json.loads(text)
        return cls(doc["shapes"], tuple(doc["orders"]), tuple(doc["edge_counts"]))


def interface_report(b: Benzenoid) -> InterfaceReport:
    shapes = fragment_shapes(b)
    return InterfaceReport(
        shapes=shapes,
        orders=tuple(fold_orders(shapes)),
        edge_counts=tuple(len(es) for es in interface_edges(b)),
    )


@dataclass(frozen=True)
class CoverOrders:
    edge_halves: dict
    interface_halves: tuple


def cover_edge_orders(b: Benzenoid, cover: ClarCover) -> CoverOrders:
    """Covering order of every vertical edge, in half units, and the
    per-interface sums for ``i_0 .. i_F``."""
    if not is_valid_cover(b, cover):
        raise InvalidCoverError("not a Clar cover of this benzenoid")
    bonds = {make_edge(*e) for e in cover.double_bonds}
    ring_edges = {e for f in cover.aromatic_rings for e in hex_edges(f)}
    halves = {}
    sums = []
    for layer in interface_edges(b):
        total = 0
        for e in layer:
            h = 2 if e in bonds else 1 if e in ring_edges else 0
            halves[e] = h
            total += h
        sums.append(total)
    return CoverOrders(halves, tuple(sums))


def verify_first_rule(b: Benzenoid) -> bool:
    """True iff every Clar cover has the shape-determined interface orders."""
    expected = tuple(2 * o for o in interface_orders(b))
    return all(
        cover_edge_orders(b, c).interface_halves == expected
        for c in enumerate_covers(b)
    )


class CentralKind(enum.Enum):
    SINGLE_BOND = "single"
    SEXTET = "sextet"


@dataclass(frozen=True)
class CentralClass:
    kind: CentralKind
    k: int
    upper: ParallelogramParams
    lower: ParallelogramParams
    weight: Polynomial

    def polynomial(self) -> Polynomial:
        return (self.weight
                * zz_parallelogram(self.upper.m, self.upper.n)
                * zz_parallelogram(self.lower.m, self.lower.n))


def _ribbon(p) -> RibbonParams:
    return p if isinstance(p, RibbonParams) else RibbonParams(*p)


def central_index(p) -> int:
    p = _ribbon(p)
    return p.m1 + p.n2


def central_class(p, kind: CentralKind, k: int) -> CentralClass:
    n1, n2, m1, m2 = _ribbon(p).astuple()
    if kind is CentralKind.SINGLE_BOND:
        return CentralClass(kind, k, ParallelogramParams(m1 - k, n2 + k),
                            ParallelogramParams(m2 + k, n1 - k), ONE)
    return CentralClass(kind, k, ParallelogramParams(m1 - k, n2 - 1 + k),
                        ParallelogramParams(m2 - 1 + k, n1 - k), X)


def central_decomposition(p) -> list:
    """N + 1 single-bond classes then N sextet classes, N = min(m1, n1)."""
    p = _ribbon(p)
    big_n = min(p.m1, p.n1)
    return ([central_class(p, CentralKind.SINGLE_BOND, k) for k in range(big_n + 1)]
            + [central_class(p, CentralKind.SEXTET, k) for k in range(1, big_n + 1)])


def central_sum(classes) -> Polynomial:
    return poly_sum(c.polynomial() for c in classes)


def central_edges(p, b: Benzenoid = None) -> list:
    """Vertical edges e_0 .. e_N of the central interface, right to left."""
    if b is None:
        b = build_ribbon(_ribbon(p))
    return list(reversed(interface_edges(b)[central_index(p)]))


def classify_cover_by_central_interface(p, cover: ClarCover, b: Benzenoid = None) -> CentralClass:
    p = _ribbon(p)
    if b is None:
        b = build_ribbon(p)
    edges = central_edges(p, b)
    orders = cover_edge_orders(b, cover).edge_halves
    halves = [orders[e] for e in edges]
    big_n = len(edges) - 1
    zeros = [i for i, h in enumerate(halves) if h == 0]
    ones = [i for i, h in enumerate(halves) if h == 1]
    twos = len(halves) - len(zeros) - len(ones)
    if len(zeros) == 1 and not ones and twos == big_n:
        return central_class(p, CentralKind.SINGLE_BOND, zeros[0])
    if not zeros and len(ones) == 2 and ones[1] == ones[0] + 1 and twos == big_n - 1:
        a, c = edges[ones[0]], edges[ones[1]]
        if any(a in hex_edges(f) and c in hex_edges(f) for f in cover.aromatic_rings):
            return central_class(p, CentralKind.SEXTET, ones[1])
    raise TheoremViolationError(f"central interface pattern {halves} matches no class")


def fixed_bond_residue(p, cls: CentralClass) -> list:
    """Impose a central-interface class on the ribbon, propagate forced bonds
    and return the remaining free components (non-empty cover graphs).

    Returns None if the imposed pattern is infeasible.
    """
    p = _ribbon(p)
    b = build_ribbon(p)
    edges = central_edges(p, b)
    g = b.graph()
    if cls.kind is CentralKind.SINGLE_BOND:
        doubled = [e for i, e in enumerate(edges) if i != cls.k]
        g = g.delete_edge(edges[cls.k])
    else:
        doubled = [e for i, e in enumerate(edges) if i not in (cls.k - 1, cls.k)]
        a, c = edges[cls.k - 1], edges[cls.k]
        ring = next(f for f in g.faces if a in hex_edges(f) and c in hex_edges(f))
        g = g.delete_vertices(hex_vertices(ring))
    g = g.delete_vertices([v for e in doubled for v in e])
    g, _, feasible = reduce_forced(g)
    if not feasible:
        return None
    return [c for c in g.components() if c.vertices]
