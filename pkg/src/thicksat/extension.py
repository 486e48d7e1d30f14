"""Edge extensions of the red class of a two-colored drawing, and their cells.

Each red inner edge, taken in a fixed order, is stretched along its line in
both directions until it would cross another red edge, the outer cycle or an
earlier extension (touching is allowed; the stretch also stops on reaching the
endpoint of an earlier extension).  The outer cycle together with all
extensions subdivides the hull into convex cells, and triangulating the
vertices on each cell boundary in red gives enough red edges for a two-colored
saturated drawing to reach 3n - 6 edges.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .drawing import Coloring, Drawing, Edge, edge_key, outer_cycle, validate
from .geom import (Point, Segment, convex_hull, cross, line_intersection, on_segment,
                   segment_intersection, segments_cross)
from .saturation import BLUE, RED, SaturationMode, complete_blue_triangulation, greedy_saturate

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtensionArrangement:
    base: Drawing
    coloring: dict[Edge, int]
    red_order: tuple[Edge, ...]
    extensions: tuple[Segment, ...]
    hull: tuple[int, ...]

    @property
    def outer_segments(self) -> tuple[Segment, ...]:
        pts = self.base.vertices
        m = len(self.hull)
        return tuple(Segment(pts[self.hull[i]], pts[self.hull[(i + 1) % m]]) for i in range(m))

    @cached_property
    def subdivision(self) -> "_Subdivision":
        return _Subdivision.build(self)

    def red_degree(self) -> dict[int, int]:
        deg: dict[int, int] = {}
        for u, v in self.red_order:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        return deg


def red_inner_edges(drawing: Drawing, coloring: Coloring) -> list[Edge]:
    hull = set(outer_cycle(drawing).edges)
    return sorted(e for e in drawing.edges if coloring[e] == RED and e not in hull)


def _ray_stop(origin: Point, away: Point, hull: Sequence[Segment], reds: Sequence[Segment],
              earlier: Sequence[Segment]) -> Point:
    """Farthest point of the ray origin -> beyond, leaving ``away`` behind, that
    can be reached without crossing anything."""
    ahead = Point(2 * origin.x - away.x, 2 * origin.y - away.y)
    best: Fraction | None = None

    def offer(t):
        nonlocal best
        if best is None or t < best:
            best = t

    for a, b in hull:
        hit = line_intersection(origin, ahead, a, b)
        if hit and hit[0] >= 0 and 0 <= hit[1] <= 1:
            offer(hit[0])
    for a, b in reds:
        hit = line_intersection(origin, ahead, a, b)
        if hit and hit[0] > 0 and 0 <= hit[1] <= 1:
            offer(hit[0])
    for a, b in earlier:
        hit = line_intersection(origin, ahead, a, b)
        if hit is None:
            continue
        t, u = hit
        if (t > 0 and 0 <= u <= 1) or (t == 0 and 0 < u < 1):
            offer(t)
    assert best is not None, "ray escaped the convex hull"
    return Point(origin.x + best * (ahead.x - origin.x), origin.y + best * (ahead.y - origin.y))


def extend_edges(drawing: Drawing, coloring: Coloring,
                 red_order: Sequence[Edge] | None = None) -> ExtensionArrangement:
    """Build the extension arrangement for the red inner edges, in ``red_order``."""
    report = validate(drawing.with_k(2), coloring)
    if not report.ok:
        raise ValueError(f"not a valid two-colored drawing:\n{report}")
    red = red_inner_edges(drawing, coloring)
    order = red if red_order is None else [edge_key(*e) for e in red_order]
    if sorted(order) != red:
        raise ValueError("red_order must list every red inner edge exactly once")
    pts = drawing.vertices
    hull_order = tuple(outer_cycle(drawing).order)
    arr = ExtensionArrangement(drawing, dict(coloring), tuple(order), (), hull_order)
    hull = arr.outer_segments
    exts: list[Segment] = []
    for i, (u, v) in enumerate(order):
        others = [Segment(pts[a], pts[b]) for a, b in order if (a, b) != (u, v)]
        end_u = _ray_stop(pts[u], pts[v], hull, others, exts)
        end_v = _ray_stop(pts[v], pts[u], hull, others, exts)
        exts.append(Segment(end_u, end_v))
    return ExtensionArrangement(drawing, dict(coloring), tuple(order), tuple(exts), hull_order)


def check_arrangement(arr: ExtensionArrangement) -> list[str]:
    """Every violated structural property of an arrangement (empty if sound)."""
    problems = []
    pts = arr.base.vertices
    reds = [Segment(pts[a], pts[b]) for a, b in arr.red_order]
    for i, ext in enumerate(arr.extensions):
        red = reds[i]
        if not (on_segment(red.a, ext) and on_segment(red.b, ext)):
            problems.append(f"extension {i} does not contain its edge")
        for j, other in enumerate(arr.extensions):
            if j != i and segments_cross(ext, other):
                problems.append(f"extensions {i} and {j} cross")
        for j, r in enumerate(reds):
            if j != i and segments_cross(ext, r):
                problems.append(f"extension {i} crosses red edge {arr.red_order[j]}")
        for s in arr.outer_segments:
            if segments_cross(ext, s):
                problems.append(f"extension {i} crosses the outer cycle")
    return problems


def _angle_key(dx, dy):
    """Sort key giving counterclockwise order of directions starting at angle 0."""
    half = 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1
    return half, _Slope(dx, dy)


class _Slope:
    __slots__ = ("dx", "dy")

    def __init__(self, dx, dy):
        self.dx, self.dy = dx, dy

    def __lt__(self, other):
        # same half-plane: a before b iff b is counterclockwise of a
        return self.dx * other.dy - self.dy * other.dx > 0


@dataclass
class _Subdivision:
    """Planar straight-line graph of the outer cycle plus all extensions."""
    nodes: list[Point]
    arcs: list[tuple[int, int]]
    faces: list[list[int]]          # node cycles, counterclockwise, bounded only
    face_halfedges: list[list[tuple[int, int]]]
    outer_face: list[int]

    @classmethod
    def build(cls, arr: ExtensionArrangement) -> "_Subdivision":
        pts = arr.base.vertices
        segs = list(arr.outer_segments) + list(arr.extensions)
        points = {pts[v] for v in arr.hull}
        for s in arr.extensions:
            points.update(s)
        for i in range(len(segs)):
            for j in range(i + 1, len(segs)):
                p = segment_intersection(segs[i], segs[j])
                if p is not None:
                    points.add(p)
        nodes = sorted(points)
        index = {p: i for i, p in enumerate(nodes)}
        arcs: set[tuple[int, int]] = set()
        for a, b in segs:
            on = [p for p in nodes if on_segment(p, Segment(a, b))]
            axis = 0 if a.x != b.x else 1
            on.sort(key=lambda p: p[axis], reverse=a[axis] > b[axis])
            for p, q in zip(on, on[1:]):
                arcs.add(edge_key(index[p], index[q]))
        out: dict[int, list[int]] = {i: [] for i in range(len(nodes))}
        for a, b in arcs:
            out[a].append(b)
            out[b].append(a)
        for a, nbrs in out.items():
            nbrs.sort(key=lambda b: _angle_key(nodes[b].x - nodes[a].x, nodes[b].y - nodes[a].y))
        seen: set[tuple[int, int]] = set()
        faces, halfedges, outer = [], [], []
        for a, b in sorted(arcs) + sorted((b, a) for a, b in arcs):
            if (a, b) in seen:
                continue
            cyc, hes = [], []
            u, v = a, b
            while (u, v) not in seen:
                seen.add((u, v))
                cyc.append(u)
                hes.append((u, v))
                ring = out[v]
                # the next boundary edge leaves v just clockwise of v -> u
                w = ring[(ring.index(u) - 1) % len(ring)]
                u, v = v, w
            area = sum(nodes[cyc[i]].x * nodes[cyc[(i + 1) % len(cyc)]].y
                       - nodes[cyc[(i + 1) % len(cyc)]].x * nodes[cyc[i]].y
                       for i in range(len(cyc)))
            if area > 0:
                faces.append(cyc)
                halfedges.append(hes)
            else:
                outer.append(cyc)
        if len(outer) != 1:
            raise AssertionError(f"arrangement has {len(outer)} unbounded boundaries")
        return cls(nodes, sorted(arcs), faces, halfedges, outer[0])


@dataclass(frozen=True)
class Cell:
    boundary: tuple[Point, ...]
    boundary_vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.boundary_vertices)

    @property
    def arcs(self) -> tuple[Segment, ...]:
        b = self.boundary
        return tuple(Segment(b[i], b[(i + 1) % len(b)]) for i in range(len(b)))

    def is_convex(self) -> bool:
        b = self.boundary
        return all(cross(b[i - 1], b[i], b[(i + 1) % len(b)]) >= 0 for i in range(len(b)))


def cells(arr: ExtensionArrangement) -> list[Cell]:
    """Inner cells of the arrangement with the original vertices on each boundary."""
    sub = arr.subdivision
    pts = arr.base.vertices
    out = []
    for cyc in sub.faces:
        poly = tuple(sub.nodes[i] for i in cyc)
        on = tuple(v for v, p in enumerate(pts)
                   if any(on_segment(p, Segment(poly[i], poly[(i + 1) % len(poly)]))
                          for i in range(len(poly))))
        out.append(Cell(poly, on))
    return out


@dataclass(frozen=True)
class Planarization:
    nodes: tuple[Point, ...]
    arcs: tuple[tuple[Point, ...], ...]     # polylines between consecutive nodes
    faces: tuple[tuple[int, ...], ...]      # cyclic arc index lists, outer face last

    def euler_characteristic(self) -> int:
        return len(self.nodes) - len(self.arcs) + len(self.faces)


def planarize(arr: ExtensionArrangement) -> Planarization:
    """Touch points of the arrangement as nodes, the pieces between them as arcs.

    Hull vertices where no extension ends are not nodes; the hull pieces
    through them become polyline arcs.
    """
    sub = arr.subdivision
    touch = {p for s in arr.extensions for p in s}
    keep = [i for i, p in enumerate(sub.nodes) if p in touch]
    keep_set = set(keep)
    nbrs: dict[int, list[int]] = {i: [] for i in range(len(sub.nodes))}
    for a, b in sub.arcs:
        nbrs[a].append(b)
        nbrs[b].append(a)
    chain_of: dict[tuple[int, int], int] = {}
    chains: list[tuple[int, ...]] = []
    for a in keep:
        for b in nbrs[a]:
            if (a, b) in chain_of:
                continue
            path = [a, b]
            while path[-1] not in keep_set:
                nxt = [w for w in nbrs[path[-1]] if w != path[-2]]
                path.append(nxt[0])
            cid = len(chains)
            chains.append(tuple(path))
            for x, y in zip(path, path[1:]):
                chain_of[(x, y)] = chain_of[(y, x)] = cid
    faces = []
    for hes in sub.face_halfedges + [_halfedges(sub.outer_face)]:
        ids = [chain_of[h] for h in hes if h in chain_of]
        compact = [c for i, c in enumerate(ids) if i == 0 or c != ids[i - 1]]
        if len(compact) > 1 and compact[0] == compact[-1]:
            compact.pop()
        faces.append(tuple(compact))
    return Planarization(tuple(sub.nodes[i] for i in keep),
                         tuple(tuple(sub.nodes[i] for i in c) for c in chains),
                         tuple(faces))


def _halfedges(cyc: list[int]) -> list[tuple[int, int]]:
    return [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]


def incidence_counts(arr: ExtensionArrangement, cs: Sequence[Cell]) -> dict[int, int]:
    counts = {v: 0 for v in range(arr.base.n)}
    for c in cs:
        for v in c.boundary_vertices:
            counts[v] += 1
    return counts


def verify_incidences(arr: ExtensionArrangement, cs: Sequence[Cell]) -> bool:
    """Every red vertex lies on exactly (red degree + 1) cells."""
    counts = incidence_counts(arr, cs)
    return all(counts[v] == d + 1 for v, d in arr.red_degree().items())


@dataclass(frozen=True)
class CountingCheck:
    red_edges: int
    cell_excess: int        # sum over cells of (size - 3)
    lhs: int                # red_edges + cell_excess
    rhs: int                # |V| - |V0| - 3
    hull_size: int

    @property
    def identity_holds(self) -> bool:
        return self.lhs == self.rhs

    @property
    def inequality_holds(self) -> bool:
        return self.lhs >= self.hull_size - 3


def counting_check(arr: ExtensionArrangement, cs: Sequence[Cell]) -> CountingCheck:
    """Red edges plus cell excess against the vertex count it should equal.

    V0 are the vertices strictly inside the hull with no red inner edge.
    """
    red_vertices = set(arr.red_degree())
    hull = set(arr.hull)
    v0 = [v for v in range(arr.base.n) if v not in hull and v not in red_vertices]
    excess = sum(c.size - 3 for c in cs)
    x = len(arr.red_order)
    return CountingCheck(x, excess, x + excess, arr.base.n - len(v0) - 3, len(hull))


def cell_diagonals(cs: Sequence[Cell], pts: Sequence[Point]) -> list[list[Edge]]:
    """Fan triangulation of each cell's vertex polygon from its lowest-index vertex."""
    out = []
    for c in cs:
        vs = list(c.boundary_vertices)
        if len(vs) <= 3:
            out.append([])
            continue
        ring = [vs[i] for i in convex_hull([pts[v] for v in vs])]
        if len(ring) != len(vs):
            raise AssertionError(f"cell vertices {vs} are not in convex position")
        r = ring.index(min(ring))
        ring = ring[r:] + ring[:r]
        out.append([edge_key(ring[0], ring[j]) for j in range(2, len(ring) - 1)])
    return out


def triangulate_cells(drawing: Drawing, coloring: Coloring,
                      arr: ExtensionArrangement) -> tuple[Drawing, dict[Edge, int]]:
    """Add red fan diagonals inside every cell; pairs that are already edges are skipped."""
    cs = cells(arr)
    new = dict(coloring)
    edges = set(drawing.edges)
    skipped = 0
    for diag in cell_diagonals(cs, drawing.vertices):
        for e in diag:
            if e in edges:
                skipped += 1
                continue
            edges.add(e)
            new[e] = RED
    if skipped:
        log.info("%d cell diagonals already present as edges", skipped)
    return Drawing(drawing.vertices, frozenset(edges), 2), new


def saturate_theta2(drawing: Drawing, coloring: Coloring) -> tuple[Drawing, dict[Edge, int]]:
    """Saturate a two-colored drawing: blue triangulation, red cell fans, then greedy."""
    if drawing.n < 3:
        raise ValueError("need at least 3 vertices")
    d1, c1 = complete_blue_triangulation(drawing, coloring)
    arr = extend_edges(d1, c1)
    d2, c2 = triangulate_cells(d1, c1, arr)
    n, hull_size = drawing.n, len(arr.hull)
    red_now = len(red_inner_edges(d2, c2))
    if red_now < hull_size - 3:
        log.info("red count %d below hull bound %d before the greedy pass", red_now, hull_size - 3)
    d3, c3 = greedy_saturate(d2, c2, 2, SaturationMode.PRECOLORED)
    if len(d3.edges) < 3 * n - 6:
        raise AssertionError(f"saturated output has {len(d3.edges)} < 3n - 6 = {3 * n - 6} edges")
    return d3, c3


__all__ = [
    "BLUE", "RED", "Cell", "CountingCheck", "ExtensionArrangement", "Planarization",
    "cells", "check_arrangement", "counting_check", "extend_edges", "incidence_counts",
    "planarize", "red_inner_edges", "saturate_theta2", "triangulate_cells", "verify_incidences",
]
