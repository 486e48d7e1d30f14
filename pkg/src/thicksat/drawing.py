"""Straight-line drawings, their edge colorings and the crossing structure."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping

from .geom import Point, Segment, convex_hull, cross, point, segments_cross

Edge = tuple[int, int]
# colors are 1..k; a coloring is total on the drawing's edges
Coloring = Mapping[Edge, int]


def edge_key(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def pair_index(n: int, u: int, v: int) -> int:
    """Position of the pair u < v in the lexicographic list of all pairs."""
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def all_pairs(n: int) -> list[Edge]:
    return list(combinations(range(n), 2))


@lru_cache(maxsize=256)
def _crossing_masks(vertices: tuple[Point, ...]) -> tuple[int, ...]:
    """For every vertex pair (lexicographic index), the bitmask of pairs it crosses.

    Coordinates are scaled to integers by the common denominator so the
    predicate runs on plain ints; the scaling is positive and exact, so the
    answers equal ``segments_cross`` on the rational points.
    """
    n = len(vertices)
    scale = math.lcm(*(c.denominator for p in vertices for c in p)) if n else 1
    pts = [(int(p.x * scale), int(p.y * scale)) for p in vertices]
    pairs = all_pairs(n)
    masks = [0] * len(pairs)
    for i, (a, b) in enumerate(pairs):
        sa = (pts[a], pts[b])
        for j in range(i + 1, len(pairs)):
            c, d = pairs[j]
            if a == c or a == d or b == c or b == d:
                continue
            if segments_cross(sa, (pts[c], pts[d])):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return tuple(masks)


@dataclass(frozen=True)
class Drawing:
    vertices: tuple[Point, ...]
    edges: frozenset[Edge] = frozenset()
    k: int = 1

    def __post_init__(self):
        verts = tuple(p if isinstance(p, Point) else point(*p) for p in self.vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertex coordinates")
        edges = set()
        for e in self.edges:
            u, v = e
            if not (0 <= u < len(verts) and 0 <= v < len(verts)):
                raise ValueError(f"edge {e} out of range")
            edges.add(edge_key(u, v))
        if self.k < 1:
            raise ValueError(f"thickness budget must be positive, got {self.k}")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def segment(self, e: Edge) -> Segment:
        return Segment(self.vertices[e[0]], self.vertices[e[1]])

    def with_edges(self, extra: Iterable[Edge]) -> "Drawing":
        return Drawing(self.vertices, self.edges | {edge_key(*e) for e in extra}, self.k)

    def with_k(self, k: int) -> "Drawing":
        return Drawing(self.vertices, self.edges, k)

    def crossing_mask(self, e: Edge) -> int:
        return _crossing_masks(self.vertices)[pair_index(self.n, *e)]

    def crosses(self, e: Edge, f: Edge) -> bool:
        return bool(self.crossing_mask(e) >> pair_index(self.n, *f) & 1)

    def non_edges(self) -> list[Edge]:
        return [e for e in all_pairs(self.n) if e not in self.edges]


@dataclass(frozen=True)
class Defect:
    kind: str
    detail: tuple

    def __str__(self):
        return f"{self.kind}: {self.detail}"


@dataclass
class ValidationReport:
    defects: list[Defect] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.defects

    def of_kind(self, kind: str) -> list[Defect]:
        return [d for d in self.defects if d.kind == kind]

    def __str__(self):
        if self.ok:
            return "valid"
        return "\n".join(str(d) for d in self.defects)


def validate(drawing: Drawing, coloring: Coloring) -> ValidationReport:
    """Collect every reason why (drawing, coloring) is not a thickness-k drawing."""
    report = ValidationReport()
    pts = drawing.vertices
    for tri in combinations(range(drawing.n), 3):
        if cross(*(pts[i] for i in tri)) == 0:
            report.defects.append(Defect("collinear", tri))
    for e in sorted(drawing.edges):
        if e not in coloring:
            report.defects.append(Defect("uncolored", e))
    for e in sorted(coloring):
        if e not in drawing.edges:
            report.defects.append(Defect("colored-non-edge", e))
        elif not 1 <= coloring[e] <= drawing.k:
            report.defects.append(Defect("color-range", (e, coloring[e])))
    edges = sorted(drawing.edges)
    for e, f in combinations(edges, 2):
        if e in coloring and coloring.get(f) == coloring[e] and drawing.crosses(e, f):
            report.defects.append(Defect("monochromatic-crossing", (e, f, coloring[e])))
    if report.ok and drawing.n >= 3 and is_convex(drawing):
        limit = drawing.n + drawing.k * (drawing.n - 3)
        if len(drawing.edges) > limit:
            report.defects.append(Defect("convex-edge-bound", (len(drawing.edges), limit)))
    return report


@dataclass(frozen=True)
class ConflictGraph:
    nodes: tuple[Edge, ...]
    adjacency: frozenset[tuple[Edge, Edge]]

    def neighbors(self, e: Edge) -> set[Edge]:
        return {b if a == e else a for a, b in self.adjacency if e in (a, b)}

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(self.nodes)
        g.add_edges_from(self.adjacency)
        return g


def conflict_graph(drawing: Drawing) -> ConflictGraph:
    edges = tuple(sorted(drawing.edges))
    adj = frozenset((e, f) for e, f in combinations(edges, 2) if drawing.crosses(e, f))
    return ConflictGraph(edges, adj)


@dataclass(frozen=True)
class OuterCycle:
    order: tuple[int, ...]
    present_edges: frozenset[Edge]

    @property
    def edges(self) -> list[Edge]:
        m = len(self.order)
        return [edge_key(self.order[i], self.order[(i + 1) % m]) for i in range(m)]


def outer_cycle(drawing: Drawing) -> OuterCycle:
    order = tuple(convex_hull(drawing.vertices))
    m = len(order)
    cycle = {edge_key(order[i], order[(i + 1) % m]) for i in range(m)}
    return OuterCycle(order, frozenset(cycle & drawing.edges))


def hull_edges(drawing: Drawing) -> set[Edge]:
    return set(outer_cycle(drawing).edges)


def is_convex(drawing: Drawing) -> bool:
    return drawing.n >= 3 and len(convex_hull(drawing.vertices)) == drawing.n


def color_classes(coloring: Coloring, k: int) -> list[set[Edge]]:
    classes: list[set[Edge]] = [set() for _ in range(k)]
    for e, c in coloring.items():
        classes[c - 1].add(e)
    return classes
