"""Exact geometric predicates over rational coordinates.

Coordinates are ``fractions.Fraction`` (ints are accepted anywhere a Fraction
is); nothing in here ever rounds.
"""
from __future__ import annotations

import math
from enum import IntEnum
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Sequence


class Orientation(IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


class Point(NamedTuple):
    x: Fraction
    y: Fraction


class Segment(NamedTuple):
    a: Point
    b: Point


def point(x, y) -> Point:
    return Point(Fraction(x), Fraction(y))


def segment(a, b) -> Segment:
    if a == b:
        raise ValueError(f"degenerate segment at {a}")
    return Segment(a, b)


def cross(p, q, r):
    """Cross product of (q - p) and (r - p)."""
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def orientation(p, q, r) -> Orientation:
    c = cross(p, q, r)
    if c > 0:
        return Orientation.COUNTERCLOCKWISE
    if c < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def segments_cross(s1, s2) -> bool:
    """True iff some point lies in the relative interior of both segments.

    Endpoint contact (shared endpoint, T-junction) is not a crossing; a
    collinear overlap of positive length is.
    """
    a, b = s1
    c, d = s2
    o1 = _sign(cross(a, b, c))
    o2 = _sign(cross(a, b, d))
    if o1 == 0 and o2 == 0:
        # collinear: compare the projections on a non-degenerate axis
        axis = 0 if a[0] != b[0] else 1
        lo1, hi1 = sorted((a[axis], b[axis]))
        lo2, hi2 = sorted((c[axis], d[axis]))
        return min(hi1, hi2) > max(lo1, lo2)
    o3 = _sign(cross(c, d, a))
    o4 = _sign(cross(c, d, b))
    return o1 * o2 < 0 and o3 * o4 < 0


def on_segment(p, s, strict: bool = False) -> bool:
    """Whether ``p`` lies on the closed segment ``s`` (open if ``strict``)."""
    a, b = s
    if cross(a, b, p) != 0:
        return False
    if strict and (p == a or p == b):
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def line_intersection(p, q, r, s):
    """Parameters (t, u) with p + t(q-p) = r + u(s-r), or None if parallel."""
    dx1, dy1 = q[0] - p[0], q[1] - p[1]
    dx2, dy2 = s[0] - r[0], s[1] - r[1]
    den = dx1 * dy2 - dy1 * dx2
    if den == 0:
        return None
    ex, ey = r[0] - p[0], r[1] - p[1]
    t = Fraction(ex * dy2 - ey * dx2) / den
    u = Fraction(ex * dy1 - ey * dx1) / den
    return t, u


def segment_intersection(s1, s2) -> Point | None:
    """The unique common point of two non-parallel closed segments, if any."""
    hit = line_intersection(s1[0], s1[1], s2[0], s2[1])
    if hit is None:
        return None
    t, u = hit
    if not (0 <= t <= 1 and 0 <= u <= 1):
        return None
    a, b = s1
    return Point(Fraction(a[0] + t * (b[0] - a[0])), Fraction(a[1] + t * (b[1] - a[1])))


def convex_hull(points: Sequence) -> list[int]:
    """Indices of the hull vertices in counterclockwise order (monotone chain).

    Points lying on a hull edge but not at a corner are not reported.
    """
    if len(points) < 3:
        raise ValueError(f"convex hull needs at least 3 points, got {len(points)}")
    order = sorted(range(len(points)), key=lambda i: (points[i][0], points[i][1]))

    def chain(indices):
        out: list[int] = []
        for i in indices:
            while len(out) >= 2 and cross(points[out[-2]], points[out[-1]], points[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(reversed(order))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise ValueError("points are collinear")
    return hull


def general_position(points: Sequence) -> bool:
    return all(cross(p, q, r) != 0 for p, q, r in combinations(points, 3))


def in_convex_position(points: Sequence) -> bool:
    return len(points) >= 3 and len(convex_hull(points)) == len(points)


def circle_points(n: int) -> tuple[Point, ...]:
    """n rational points on the unit circle in counterclockwise order.

    Each point is the exact image of a rational slope t under
    t -> ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)), so all points lie on the
    circle and no three are collinear.
    """
    pts = []
    for i in range(n):
        theta = 2 * math.pi * (i + 1 / 3) / n
        t = Fraction(math.tan(theta / 2)).limit_denominator(10_000)
        den = 1 + t * t
        pts.append(Point((1 - t * t) / den, 2 * t / den))
    if len(set(pts)) != n:
        raise ValueError(f"could not place {n} distinct points")
    return tuple(pts)
