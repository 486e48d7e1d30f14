"""Saturation checks and saturating procedures, precolored and free."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from . import _accel
from .drawing import Coloring, Drawing, Edge, all_pairs, edge_key, pair_index, validate

BLUE, RED = 1, 2


class Inconclusive(RuntimeError):
    """The coloring search ran out of budget before reaching an answer."""


class SaturationMode(Enum):
    PRECOLORED = "precolored"
    FREE = "free"


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 2_000_000

    def __post_init__(self):
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be at least 1")


DEFAULT_BUDGET = SearchBudget()


def _color_masks(drawing: Drawing, coloring: Coloring, k: int) -> list[int]:
    masks = [0] * (k + 1)
    for e, c in coloring.items():
        masks[c] |= 1 << pair_index(drawing.n, *e)
    return masks


def _require_valid(drawing: Drawing, coloring: Coloring, k: int):
    report = validate(drawing.with_k(k), coloring)
    if not report.ok:
        raise ValueError(f"coloring is not a valid thickness-{k} certificate:\n{report}")


def addable_colors_precolored(drawing: Drawing, coloring: Coloring, uv: Edge,
                              k: int | None = None) -> set[int]:
    """Colors the straight segment uv could take without a monochromatic crossing."""
    k = drawing.k if k is None else k
    uv = edge_key(*uv)
    if uv in drawing.edges:
        raise ValueError(f"{uv} is already an edge")
    _require_valid(drawing, coloring, k)
    masks = _color_masks(drawing, coloring, k)
    cross = drawing.crossing_mask(uv)
    return {c for c in range(1, k + 1) if not cross & masks[c]}


def k_colorable(drawing: Drawing, k: int | None = None,
                budget: SearchBudget = DEFAULT_BUDGET) -> dict[Edge, int] | None:
    """A coloring of the edges with colors 1..k and no monochromatic crossing.

    Returns None when none exists; raises Inconclusive when the search budget
    runs out first.
    """
    k = drawing.k if k is None else k
    edges = sorted(drawing.edges)
    if not edges:
        return {}
    n = drawing.n
    bit = {pair_index(n, *e): i for i, e in enumerate(edges)}
    nbrs = []
    for e in edges:
        mask = drawing.crossing_mask(e)
        nbrs.append([i for p, i in bit.items() if mask >> p & 1])
    indptr = np.zeros(len(edges) + 1, np.int64)
    indptr[1:] = np.cumsum([len(x) for x in nbrs])
    indices = np.array([i for x in nbrs for i in x], np.int64)
    degree = np.diff(indptr)
    status, colors, _ = _accel.dsatur(indptr, indices, degree, k, budget.max_nodes)
    if status < 0:
        raise Inconclusive(f"coloring search exceeded {budget.max_nodes} nodes "
                           f"({len(edges)} edges, k={k})")
    if status == 0:
        return None
    return {e: int(c) + 1 for e, c in zip(edges, colors)}


def is_saturated(drawing: Drawing, coloring: Coloring | None, k: int | None = None,
                 mode: SaturationMode = SaturationMode.PRECOLORED,
                 budget: SearchBudget = DEFAULT_BUDGET) -> bool:
    k = drawing.k if k is None else k
    if mode is SaturationMode.PRECOLORED:
        if coloring is None:
            raise ValueError("precolored saturation needs a coloring")
        _require_valid(drawing, coloring, k)
        masks = _color_masks(drawing, coloring, k)
        return all(all(drawing.crossing_mask(uv) & masks[c] for c in range(1, k + 1))
                   for uv in drawing.non_edges())
    base = dict(coloring) if coloring is not None else k_colorable(drawing, k, budget)
    if base is None:
        raise ValueError(f"drawing has no thickness-{k} coloring")
    masks = _color_masks(drawing, base, k)
    for uv in drawing.non_edges():
        cross = drawing.crossing_mask(uv)
        if any(not cross & masks[c] for c in range(1, k + 1)):
            return False
        if k_colorable(drawing.with_edges([uv]), k, budget) is not None:
            return False
    return True


def greedy_saturate(drawing: Drawing, coloring: Coloring | None, k: int | None = None,
                    mode: SaturationMode = SaturationMode.PRECOLORED,
                    budget: SearchBudget = DEFAULT_BUDGET,
                    candidate_order: Sequence[Edge] | None = None) -> tuple[Drawing, dict[Edge, int]]:
    """Add non-edges in candidate order while the drawing stays thickness-k.

    Precolored: each added edge takes its smallest admissible color.  Free:
    an edge is added whenever some recoloring of everything admits it, and
    that witness coloring replaces the current one.  One pass suffices in
    both modes because admissibility only shrinks as edges are added.
    """
    k = drawing.k if k is None else k
    drawing = drawing.with_k(k)
    if mode is SaturationMode.PRECOLORED:
        if coloring is None:
            raise ValueError("precolored saturation needs a coloring")
        _require_valid(drawing, coloring, k)
        current = dict(coloring)
    else:
        current = dict(coloring) if coloring is not None else k_colorable(drawing, k, budget)
        if current is None:
            raise ValueError(f"drawing has no thickness-{k} coloring")
        _require_valid(drawing, current, k)
    order = all_pairs(drawing.n) if candidate_order is None else [edge_key(*e) for e in candidate_order]
    edges = set(drawing.edges)
    masks = _color_masks(drawing, current, k)
    n = drawing.n
    for uv in order:
        if uv in edges:
            continue
        cross = drawing.crossing_mask(uv)
        free = [c for c in range(1, k + 1) if not cross & masks[c]]
        if free:
            current[uv] = free[0]
            masks[free[0]] |= 1 << pair_index(n, *uv)
            edges.add(uv)
            continue
        if mode is SaturationMode.FREE:
            trial = Drawing(drawing.vertices, frozenset(edges | {uv}), k)
            witness = k_colorable(trial, k, budget)
            if witness is not None:
                current = witness
                edges.add(uv)
                masks = _color_masks(drawing, current, k)
    return Drawing(drawing.vertices, frozenset(edges), k), current


def complete_blue_triangulation(drawing: Drawing, coloring: Coloring) -> tuple[Drawing, dict[Edge, int]]:
    """Grow the blue class into a maximal plane graph on all vertices.

    Every pair whose segment crosses no blue edge becomes blue: missing pairs
    are added, red ones are recolored.  Red edges are never created.
    """
    drawing = drawing.with_k(2)
    _require_valid(drawing, coloring, 2)
    n = drawing.n
    current = dict(coloring)
    edges = set(drawing.edges)
    blue = _color_masks(drawing, current, 2)[BLUE]
    for uv in all_pairs(n):
        if current.get(uv) == BLUE or drawing.crossing_mask(uv) & blue:
            continue
        current[uv] = BLUE
        edges.add(uv)
        blue |= 1 << pair_index(n, *uv)
    return Drawing(drawing.vertices, frozenset(edges), 2), current

