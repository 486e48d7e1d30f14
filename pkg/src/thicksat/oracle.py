"""Brute-force ground truth for convex drawings at desk scale.

In convex position only the circular order matters: two chords cross iff
their endpoints interleave.  A drawing is then a set of diagonals of the
n-cycle (the n hull edges cross nothing, so every saturated drawing has all of
them), and a k-coloring is a k-tuple of pairwise disjoint plane diagonal sets.

Enumeration walks non-decreasing k-tuples of plane sets (color classes are
interchangeable) and is exact.  Default caps keep a run under a minute or so:

======  ====================  ================
mode    k=1,2 / k=3 / k>=4    slowest default
======  ====================  ================
prec.   n <= 9 / 8 / 7        k=3, n=8: ~10 s
free    n <= 8 / 7 / 6        k=3, n=7: ~5 s
======  ====================  ================

``THICKSAT_CAP`` (an integer) replaces every default cap.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from . import _accel
from .drawing import Drawing, Edge, edge_key
from .geom import circle_points
from .saturation import SaturationMode


class CapExceeded(ValueError):
    """Requested instance is beyond the configured enumeration cap."""


def interleaves(n: int, a: int, b: int, c: int, d: int) -> bool:
    """Chords ab and cd cross in every convex placement of 0..n-1."""
    if len({a % n, b % n, c % n, d % n}) != 4:
        raise ValueError(f"chord endpoints must be distinct: {(a, b, c, d)}")
    lo, hi = sorted((a % n, b % n))
    return (lo < c % n < hi) != (lo < d % n < hi)


def diagonals(n: int) -> list[Edge]:
    return [(a, b) for a, b in combinations(range(n), 2) if (b - a) % n not in (1, n - 1)]


def hull_cycle(n: int) -> list[Edge]:
    return [edge_key(i, (i + 1) % n) for i in range(n)]


def diagonal_cross_masks(n: int) -> list[int]:
    diag = diagonals(n)
    masks = [0] * len(diag)
    for i, j in combinations(range(len(diag)), 2):
        (a, b), (c, d) = diag[i], diag[j]
        if len({a, b, c, d}) == 4 and interleaves(n, a, b, c, d):
            masks[i] |= 1 << j
            masks[j] |= 1 << i
    return masks


def plane_sets(n: int) -> np.ndarray:
    """Every non-crossing set of diagonals (the dissections of the n-gon), as bitmasks."""
    cross = diagonal_cross_masks(n)
    out: list[int] = []

    def grow(i: int, chosen: int, blocked: int):
        if i == len(cross):
            out.append(chosen)
            return
        grow(i + 1, chosen, blocked)
        if not blocked >> i & 1:
            grow(i + 1, chosen | 1 << i, blocked | cross[i])

    grow(0, 0, 0)
    return np.array(sorted(out), dtype=np.int64)


def _mask_to_edges(n: int, mask: int) -> frozenset[Edge]:
    diag = diagonals(n)
    return frozenset(diag[j] for j in range(len(diag)) if mask >> j & 1)


def _edges_to_mask(n: int, edges: Iterable[Edge]) -> int:
    index = {e: j for j, e in enumerate(diagonals(n))}
    mask = 0
    for e in edges:
        e = edge_key(*e)
        if e in index:
            mask |= 1 << index[e]
    return mask


def dihedral_permutations(n: int) -> np.ndarray:
    """Action of the 2n symmetries of the n-cycle on diagonal indices."""
    diag = diagonals(n)
    index = {e: j for j, e in enumerate(diag)}
    perms = []
    for r in range(n):
        for flip in (False, True):
            g = (lambda x, r=r: (r - x) % n) if flip else (lambda x, r=r: (x + r) % n)
            perms.append([index[edge_key(g(a), g(b))] for a, b in diag])
    return np.array(perms, dtype=np.int64).reshape(2 * n, len(diag))


@dataclass(frozen=True)
class CircularDrawing:
    n: int
    chords: frozenset[Edge]
    coloring: dict[Edge, int] | None = field(default=None, compare=False)

    @property
    def edge_count(self) -> int:
        return len(self.chords)

    def realize(self, k: int) -> tuple[Drawing, dict[Edge, int] | None]:
        """Place the drawing on rational points of a circle."""
        return Drawing(circle_points(self.n), self.chords, k), self.coloring


@dataclass
class EnumerationResult:
    n: int
    k: int
    mode: SaturationMode
    min_edges: int
    max_edges: int
    witness_min: CircularDrawing
    witness_max: CircularDrawing
    instances_examined: int
    saturated_count: int
    edge_set_classes: int
    configurations: list | None = None

    def table(self) -> str:
        rows = [
            ("n", self.n), ("k", self.k), ("mode", self.mode.value),
            ("min edges", self.min_edges), ("max edges", self.max_edges),
            ("instances examined", self.instances_examined),
            ("saturated configurations", self.saturated_count),
            ("saturated edge sets up to symmetry", self.edge_set_classes),
            ("min witness", sorted(self.witness_min.chords)),
            ("max witness", sorted(self.witness_max.chords)),
        ]
        width = max(len(r[0]) for r in rows)
        return "\n".join(f"{name.ljust(width)}  {value}" for name, value in rows)


def default_cap(k: int, mode: SaturationMode) -> int:
    env = os.environ.get("THICKSAT_CAP")
    if env:
        return int(env)
    if mode is SaturationMode.PRECOLORED:
        return 9 if k <= 2 else 8 if k == 3 else 7
    return 8 if k <= 2 else 7 if k == 3 else 6


def _check(n: int, k: int, mode: SaturationMode, cap: int | None):
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    limit = default_cap(k, mode) if cap is None else cap
    if n > limit:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {limit} for k={k} "
                          f"({mode.value}); raise it with --cap or THICKSAT_CAP")


def _class_count(n: int, masks: np.ndarray) -> int:
    if masks.size == 0:
        return 0
    return int(np.unique(_accel.dihedral_min(masks, dihedral_permutations(n))).size)


def enumerate_saturated(n: int, k: int, mode: SaturationMode = SaturationMode.PRECOLORED,
                        cap: int | None = None, collect: bool = False) -> EnumerationResult:
    """Exact min/max edge counts over all saturated convex thickness-k drawings."""
    _check(n, k, mode, cap)
    if mode is SaturationMode.PRECOLORED:
        return _enumerate_precolored(n, k, collect)
    return _enumerate_free(n, k, collect)


def _enumerate_precolored(n: int, k: int, collect: bool) -> EnumerationResult:
    masks = plane_sets(n)
    cross = diagonal_cross_masks(n)
    full = (1 << len(cross)) - 1
    blocked = np.array([_blocked(int(m), cross) for m in masks], dtype=np.int64)
    sizes = np.bitwise_count(masks).astype(np.int64)
    empty = np.zeros((0, k), np.int64)
    examined, count, lo, hi, amin, amax = _accel.scan_precolored(masks, blocked, sizes, full, k, empty)
    rows = np.zeros((count, k), np.int64)
    _accel.scan_precolored(masks, blocked, sizes, full, k, rows)
    unions = np.bitwise_or.reduce(masks[rows], axis=1) if count else np.zeros(0, np.int64)

    def witness(idx):
        coloring = {e: 1 for e in hull_cycle(n)}
        for color, j in enumerate(idx, start=1):
            for e in _mask_to_edges(n, int(masks[j])):
                coloring[e] = color
        return CircularDrawing(n, frozenset(coloring), coloring)

    configs = None
    if collect:
        configs = [tuple(int(masks[j]) for j in row) for row in rows]
    return EnumerationResult(
        n, k, SaturationMode.PRECOLORED, n + int(lo), n + int(hi), witness(amin), witness(amax),
        int(examined), int(count), _class_count(n, unions), configs)


def _blocked(mask: int, cross: list[int]) -> int:
    out = 0
    j = 0
    while mask:
        if mask & 1:
            out |= cross[j]
        mask >>= 1
        j += 1
    return out


def maximal_sets(family: np.ndarray, width: int) -> np.ndarray:
    """Members of a sorted, down-closed family with no one-element extension in it."""
    keep = np.ones(family.size, dtype=bool)
    for j in range(width):
        bit = np.int64(1) << np.int64(j)
        lacking = (family & bit) == 0
        grown = family | bit
        pos = np.searchsorted(family, grown)
        pos = np.minimum(pos, family.size - 1)
        keep &= ~(lacking & (family[pos] == grown))
    return family[keep]


def _enumerate_free(n: int, k: int, collect: bool) -> EnumerationResult:
    masks = plane_sets(n)
    width = n * (n - 3) // 2
    total = _accel.scan_unions(masks, k, np.zeros(0, np.int64))
    unions = np.zeros(total, np.int64)
    _accel.scan_unions(masks, k, unions)
    family = np.unique(unions)
    sat = maximal_sets(family, width)
    sizes = np.bitwise_count(sat)
    lo, hi = int(np.argmin(sizes)), int(np.argmax(sizes))

    def witness(mask):
        chords = _mask_to_edges(n, int(mask)) | frozenset(hull_cycle(n))
        return CircularDrawing(n, chords)

    configs = [int(m) for m in sat] if collect else None
    return EnumerationResult(
        n, k, SaturationMode.FREE, n + int(sizes[lo]), n + int(sizes[hi]),
        witness(sat[lo]), witness(sat[hi]), int(total), int(sat.size),
        _class_count(n, sat), configs)


def circular_k_coloring(n: int, chords: Iterable[Edge], k: int,
                        max_nodes: int = 2_000_000) -> dict[Edge, int] | None:
    """k-color the chord conflict graph with the same search as saturation.k_colorable."""
    from .saturation import Inconclusive

    edges = sorted(edge_key(*e) for e in chords)
    nbrs = [[j for j, (c, d) in enumerate(edges)
             if len({a, b, c, d}) == 4 and interleaves(n, a, b, c, d)] for a, b in edges]
    indptr = np.zeros(len(edges) + 1, np.int64)
    indptr[1:] = np.cumsum([len(x) for x in nbrs])
    indices = np.array([j for x in nbrs for j in x], np.int64)
    status, colors, _ = _accel.dsatur(indptr, indices, np.diff(indptr), k, max_nodes)
    if status < 0:
        raise Inconclusive(f"chord coloring exceeded {max_nodes} nodes")
    if status == 0:
        return None
    return {e: int(c) + 1 for e, c in zip(edges, colors)}


def is_saturated_circular(n: int, k: int, chords: Iterable[Edge],
                          coloring: dict[Edge, int] | None = None,
                          mode: SaturationMode = SaturationMode.PRECOLORED) -> bool:
    """Saturation decided purely from the circular order."""
    chords = {edge_key(*e) for e in chords}
    missing = [e for e in combinations(range(n), 2) if e not in chords]
    if mode is SaturationMode.PRECOLORED:
        if coloring is None:
            raise ValueError("precolored saturation needs a coloring")
        for a, b in missing:
            hit = {coloring[(c, d)] for c, d in chords
                   if len({a, b, c, d}) == 4 and interleaves(n, a, b, c, d)}
            if len(hit) < k:
                return False
        return True
    if circular_k_coloring(n, chords, k) is None:
        raise ValueError(f"chord set is not {k}-colorable")
    return all(circular_k_coloring(n, chords | {e}, k) is None for e in missing)


BOUND_NAMES = {
    "max-convex": SaturationMode.PRECOLORED,
    "precolored-min-upper": SaturationMode.PRECOLORED,
    "precolored-min-lower": SaturationMode.PRECOLORED,
    "k3-precolored-lower": SaturationMode.PRECOLORED,
    "k3-free-lower": SaturationMode.FREE,
    "k2-exact": SaturationMode.PRECOLORED,
}


@dataclass
class BoundReport:
    bound: str
    n: int
    k: int
    mode: SaturationMode
    value: int
    observed: tuple[int, int]
    passed: bool
    result: EnumerationResult

    def __str__(self):
        verdict = "PASS" if self.passed else "FAIL"
        return (f"{verdict} {self.bound} n={self.n} k={self.k} {self.mode.value}: "
                f"bound {self.value}, observed min {self.observed[0]} max {self.observed[1]}")


def verify_bound(n: int, k: int, bound: str, mode: SaturationMode | None = None,
                 cap: int | None = None) -> BoundReport:
    """Check a closed-form bound against exhaustive enumeration."""
    from .convex import bounds

    if bound not in BOUND_NAMES:
        raise ValueError(f"unknown bound {bound!r}; choose from {sorted(BOUND_NAMES)}")
    mode = BOUND_NAMES[bound] if mode is None else mode
    table = bounds(n, k)
    value = {
        "max-convex": table.max_convex,
        "precolored-min-upper": table.precolored_min_upper,
        "precolored-min-lower": table.precolored_min_lower,
        "k3-precolored-lower": table.k3_precolored_lower,
        "k3-free-lower": table.k3_free_lower,
        "k2-exact": 3 * n - 6 if k == 2 else None,
    }[bound]
    if value is None:
        raise ValueError(f"bound {bound} does not apply to n={n}, k={k}")
    res = enumerate_saturated(n, k, mode, cap)
    if bound == "max-convex":
        ok = res.max_edges <= value
    elif bound == "precolored-min-upper":
        ok = res.min_edges <= value
    elif bound == "k2-exact":
        ok = res.min_edges == res.max_edges == value
    else:
        ok = res.min_edges >= value
    return BoundReport(bound, n, k, mode, value, (res.min_edges, res.max_edges), ok, res)
