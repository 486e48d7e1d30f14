"""Convex-position constructions: angulation counts, nice matchings, zigzags, bounds.

Vertices of a convex drawing are identified with their position 0..n-1 along
the hull.  A nice matching on such a cycle is always a full parallel class of
chords, ``{x, y}`` with ``x + y = s (mod n)``; ``s`` is stored as ``axis`` and
tilting moves it by one step.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence

from .drawing import Coloring, Drawing, Edge, edge_key, is_convex, outer_cycle
from .geom import circle_points as convex_polygon
from .oracle import interleaves


class AngulationCount(NamedTuple):
    inner_edges: int
    exact: bool


def inner_angulation_inner_edges(n: int, l: int) -> AngulationCount:
    """Inner edges of an inner l-angulation on n vertices: (n - l) / (l - 2).

    When (n - l) is not a multiple of (l - 2) no exact l-angulation exists; the
    floor is returned with ``exact=False``.
    """
    if l < 3:
        raise ValueError(f"face size must be at least 3, got {l}")
    if n < l:
        raise ValueError(f"need n >= l, got n={n}, l={l}")
    q, r = divmod(n - l, l - 2)
    return AngulationCount(q, r == 0)


def is_hull_pair(n: int, a: int, b: int) -> bool:
    return (a - b) % n in (1, n - 1)


def outerplane_faces(n: int, chords: Sequence[Edge]) -> list[list[int]]:
    """Inner faces of the cycle 0..n-1 plus non-crossing chords, as vertex lists."""
    faces = [list(range(n))]
    for a, b in chords:
        for f_i, face in enumerate(faces):
            if a in face and b in face:
                i, j = sorted((face.index(a), face.index(b)))
                if j - i in (1, len(face) - 1):
                    raise ValueError(f"chord {(a, b)} duplicates a face side")
                faces[f_i:f_i + 1] = [face[i:j + 1], face[j:] + face[:i + 1]]
                break
        else:  # pragma: no cover - unreachable for non-crossing chords
            raise ValueError(f"chord {(a, b)} lies in no face")
    return faces


def _check_non_crossing(n: int, chords: Sequence[Edge]):
    for i, (a, b) in enumerate(chords):
        if a == b or is_hull_pair(n, a, b):
            raise ValueError(f"{(a, b)} is not a diagonal of the {n}-cycle")
        for c, d in chords[i + 1:]:
            if len({a, b, c, d}) == 4 and interleaves(n, a, b, c, d):
                raise ValueError(f"chords {(a, b)} and {(c, d)} cross")


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class NiceMatching:
    n: int
    chords: tuple[Edge, ...]
    axis: int

    def __post_init__(self):
        object.__setattr__(self, "axis", self.axis % self.n)

    @property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(edge_key(*c) for c in self.chords)


def parallel_class(n: int, axis: int) -> NiceMatching:
    """All diagonals {x, y} with x + y = axis (mod n), in dual-path order."""
    s = axis % n
    chords = []
    if s % 2 == 0:
        lo, hi, width = s // 2, s // 2, 0
    else:
        lo, hi, width = (s - 1) // 2, (s + 1) // 2, 1
    # walk away from the end of the strip that sits at s/2
    while True:
        lo, hi, width = lo - 1, hi + 1, width + 2
        if width > n - 2:
            break
        chords.append(edge_key(lo % n, hi % n))
    return NiceMatching(n, tuple(chords), s)


def canonical_nice_matching(n: int) -> NiceMatching:
    """Chords (i, n - i) for 1 <= i < n/2."""
    if n < 4:
        raise ValueError(f"nice matchings need n >= 4, got {n}")
    return parallel_class(n, 0)


def is_nice_matching(n: int, chords: Sequence[Edge]) -> bool:
    try:
        _check_non_crossing(n, chords)
        faces = outerplane_faces(n, [edge_key(*c) for c in chords])
    except ValueError:
        return False
    if len(faces) == 1:
        return len(faces[0]) in (3, 4)
    # faces sharing a chord are adjacent in the weak dual
    sides: dict[Edge, list[int]] = {}
    for i, face in enumerate(faces):
        for j in range(len(face)):
            e = edge_key(face[j], face[(j + 1) % len(face)])
            sides.setdefault(e, []).append(i)
    degree = [0] * len(faces)
    for owners in sides.values():
        if len(owners) == 2:
            for i in owners:
                degree[i] += 1
    ends = [i for i, d in enumerate(degree) if d == 1]
    if len(ends) != 2 or any(d not in (1, 2) for d in degree):
        return False
    # a tree (outerplane weak dual) with max degree 2 and two leaves is a path
    return all(len(faces[i]) in (3, 4) if degree[i] == 1 else len(faces[i]) == 4
               for i in range(len(faces)))


def tilt(m: NiceMatching, side: Side) -> NiceMatching:
    """Left or right tilt: the missing face diagonals leaning one way.

    In a quad face a < b < c < d bounded by chords (a, d) and (b, c), the left
    tilt takes (a, c) and the right tilt (b, d).
    """
    if m.edge_set != parallel_class(m.n, m.axis).edge_set or not is_nice_matching(m.n, m.chords):
        raise ValueError(f"not a nice matching: {m}")
    step = -1 if side is Side.LEFT else 1
    return parallel_class(m.n, m.axis + step)


def zigzag_classes(n: int, k: int) -> list[frozenset[Edge]]:
    """Inner edges of each color class of the precolored zigzag.

    The first matching is the left tilt of the canonical one, so the first
    middle class is the canonical matching itself.
    """
    m1 = tilt(canonical_nice_matching(n), Side.LEFT)
    matchings = [m1]
    for _ in range(1, k):
        matchings.append(tilt(matchings[-1], Side.RIGHT))
    classes = [set(m.edge_set) for m in matchings]
    classes[0] |= tilt(m1, Side.LEFT).edge_set
    classes[-1] |= tilt(matchings[-1], Side.RIGHT).edge_set
    return [frozenset(c) for c in classes]


def build_zigzag(n: int, k: int) -> tuple[Drawing, dict[Edge, int]]:
    if n < 5:
        raise ValueError(f"zigzag needs n >= 5, got n={n}")
    if k < 2:
        raise ValueError(f"zigzag needs k >= 2, got k={k}")
    if 2 * k > n:
        raise ValueError(f"zigzag requires k <= n/2 (color classes must be disjoint), "
                         f"got n={n}, k={k}")
    classes = zigzag_classes(n, k)
    coloring: dict[Edge, int] = {edge_key(i, (i + 1) % n): 1 for i in range(n)}
    for color, cls in enumerate(classes, start=1):
        for e in cls:
            if e in coloring:
                raise AssertionError(f"zigzag classes overlap at {e}")
            coloring[e] = color
    return Drawing(convex_polygon(n), frozenset(coloring), k), coloring


def _hull_positions(drawing: Drawing) -> dict[int, int]:
    return {v: i for i, v in enumerate(outer_cycle(drawing).order)}


def check_face_sizes(drawing: Drawing, coloring: Coloring, k: int | None = None) -> dict[int, int]:
    """Largest inner face of (color class + outer cycle), for each color 1..k."""
    k = drawing.k if k is None else k
    if not is_convex(drawing):
        raise ValueError("face sizes are only defined for convex drawings")
    n = drawing.n
    pos = _hull_positions(drawing)
    chords: dict[int, list[Edge]] = {c: [] for c in range(1, k + 1)}
    for e, c in coloring.items():
        a, b = pos[e[0]], pos[e[1]]
        if not is_hull_pair(n, a, b):
            chords[c].append(edge_key(a, b))
    return {c: max(len(f) for f in outerplane_faces(n, sorted(ch))) for c, ch in chords.items()}


@dataclass(frozen=True)
class BoundsTable:
    n: int
    k: int
    max_convex: int
    precolored_min_upper: int | None
    precolored_min_lower: int | None
    k3_precolored_lower: int | None
    k3_free_lower: int | None


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def bounds(n: int, k: int) -> BoundsTable:
    """Closed-form edge bounds for convex thickness-k drawings on n vertices.

    Fields whose theorem does not apply to (n, k) are None.
    """
    if n < 3:
        raise ValueError(f"bounds need n >= 3, got {n}")
    upper = (k + 4) * (n - 2) // 2 if n >= 5 and 2 <= k and 2 * k <= n else None
    lower = None
    if k >= 2 and n >= 2 * k - 1:
        lower = _ceil_div(k * (n - 2 * k + 1), 2 * k - 3) + n
    k3p = _ceil_div(5 * n, 2) - 6 if k == 3 else None
    k3f = _ceil_div(7 * n, 2) - 8 if k == 3 else None
    return BoundsTable(n, k, n + k * (n - 3), upper, lower, k3p, k3f)
