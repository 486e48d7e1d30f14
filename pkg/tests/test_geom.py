from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thicksat.geom import (Orientation, Point, circle_points, convex_hull, general_position,
                           in_convex_position, line_intersection, on_segment, orientation, point,
                           segment, segment_intersection, segments_cross)

coord = st.integers(-12, 12)
pts = st.builds(point, coord, coord)


def seg(a, b, c, d):
    return (point(a, b), point(c, d))


@pytest.mark.parametrize("s1,s2,expected", [
    (seg(0, 0, 2, 2), seg(0, 2, 2, 0), True),        # proper crossing
    (seg(0, 0, 2, 0), seg(1, 0, 1, 3), False),       # T-junction
    (seg(0, 0, 2, 0), seg(2, 0, 3, 5), False),       # shared endpoint
    (seg(0, 0, 4, 0), seg(2, 0, 6, 0), True),        # collinear overlap
    (seg(0, 0, 2, 0), seg(2, 0, 5, 0), False),       # collinear, touching
    (seg(0, 0, 1, 0), seg(3, 0, 5, 0), False),       # collinear, apart
    (seg(0, 0, 1, 1), seg(3, 0, 4, 5), False),
    (seg(0, 0, 0, 4), seg(0, 1, 0, 2), True),        # vertical containment
])
def test_segments_cross_cases(s1, s2, expected):
    assert segments_cross(s1, s2) is expected
    assert segments_cross(s2, s1) is expected


def test_orientation_and_rationals():
    assert orientation(point(0, 0), point(1, 0), point(0, 1)) is Orientation.COUNTERCLOCKWISE
    assert orientation(point(0, 0), point(0, 1), point(1, 0)) is Orientation.CLOCKWISE
    third = Fraction(1, 3)
    assert orientation(point(0, 0), point(third, third), point(1, 1)) is Orientation.COLLINEAR


def test_segment_rejects_degenerate():
    with pytest.raises(ValueError):
        segment(point(1, 1), point(1, 1))


def test_convex_hull_rejects_collinear_and_small():
    with pytest.raises(ValueError):
        convex_hull([point(0, 0), point(1, 1), point(2, 2)])
    with pytest.raises(ValueError):
        convex_hull([point(0, 0), point(1, 1)])


def _brute_cross(s1, s2):
    """Sample a point in both relative interiors by solving the two lines exactly."""
    (a, b), (c, d) = s1, s2
    if a == b or c == d:
        return False
    hit = line_intersection(a, b, c, d)
    if hit is not None:
        t, u = hit
        return 0 < t < 1 and 0 < u < 1
    if orientation(a, b, c) != Orientation.COLLINEAR:
        return False
    # collinear: a shared interior point exists iff some midpoint of the sorted ends is inside both
    ends = sorted({a, b, c, d})
    mids = [Point((p.x + q.x) / 2, (p.y + q.y) / 2) for p, q in zip(ends, ends[1:])]
    return any(on_segment(m, s1, strict=True) and on_segment(m, s2, strict=True) for m in mids)


@settings(max_examples=400)
@given(pts, pts, pts, pts)
def test_segments_cross_matches_parametric(a, b, c, d):
    if a == b or c == d:
        return
    assert segments_cross((a, b), (c, d)) == _brute_cross((a, b), (c, d))
    assert segments_cross((a, b), (c, d)) == segments_cross((d, c), (b, a))


@given(pts, pts, pts, pts)
def test_segment_intersection_lies_on_both(a, b, c, d):
    if a == b or c == d:
        return
    p = segment_intersection((a, b), (c, d))
    if p is not None:
        assert on_segment(p, (a, b)) and on_segment(p, (c, d))


def _brute_hull(points):
    out = set()
    for i, p in enumerate(points):
        for j, q in enumerate(points):
            if i == j:
                continue
            sides = [orientation(p, q, r) for k, r in enumerate(points) if k not in (i, j)]
            if all(s == Orientation.COUNTERCLOCKWISE for s in sides):
                out.update((i, j))
    return out


@settings(max_examples=200)
@given(st.lists(pts, min_size=3, max_size=9, unique=True))
def test_convex_hull_matches_brute_force(points):
    if not general_position(points):
        return
    hull = convex_hull(points)
    assert set(hull) == _brute_hull(points)
    m = len(hull)
    assert all(orientation(points[hull[i]], points[hull[(i + 1) % m]], points[hull[(i + 2) % m]])
               is Orientation.COUNTERCLOCKWISE for i in range(m))


@pytest.mark.parametrize("n", [3, 4, 5, 8, 13, 20])
def test_circle_points_convex_general(n):
    ps = circle_points(n)
    assert in_convex_position(ps) and general_position(ps)
    assert convex_hull(ps) == sorted(convex_hull(ps), key=lambda i: (i - convex_hull(ps)[0]) % n)
    assert all(p.x * p.x + p.y * p.y == 1 for p in ps)


def test_general_position_detects_collinear():
    assert not general_position([point(0, 0), point(1, 2), point(2, 4), point(5, 0)])
    assert general_position([point(0, 0), point(1, 2), point(2, 5)])
    assert all(not segments_cross(*pair) for pair in combinations([seg(0, 0, 1, 0), seg(2, 2, 3, 3)], 2))
