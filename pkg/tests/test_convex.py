import pytest

from thicksat.convex import (NiceMatching, Side, bounds, build_zigzag, canonical_nice_matching,
                             check_face_sizes, inner_angulation_inner_edges, is_nice_matching,
                             outerplane_faces, parallel_class, tilt, zigzag_classes)
from thicksat.drawing import Drawing, validate
from thicksat.geom import circle_points, point
from thicksat.saturation import is_saturated


@pytest.mark.parametrize("n,l,expected", [(6, 3, (3, True)), (8, 4, (2, True)), (7, 4, (1, False)),
                                          (5, 5, (0, True)), (10, 3, (7, True))])
def test_angulation_counts(n, l, expected):
    assert tuple(inner_angulation_inner_edges(n, l)) == expected


def test_angulation_counts_reject():
    with pytest.raises(ValueError):
        inner_angulation_inner_edges(5, 2)
    with pytest.raises(ValueError):
        inner_angulation_inner_edges(3, 4)


def test_outerplane_faces_split():
    faces = outerplane_faces(6, [(0, 3), (0, 2)])
    assert sorted(map(len, faces)) == [3, 3, 4]
    with pytest.raises(ValueError):
        outerplane_faces(5, [(0, 1)])


def test_canonical_matching():
    m = canonical_nice_matching(8)
    assert m.edge_set == {(1, 7), (2, 6), (3, 5)}
    assert is_nice_matching(8, m.chords)
    with pytest.raises(ValueError):
        canonical_nice_matching(3)


@pytest.mark.parametrize("n", range(4, 13))
def test_every_parallel_class_is_nice(n):
    for s in range(n):
        m = parallel_class(n, s)
        assert is_nice_matching(n, m.chords)
        expected = (n - 3) // 2 if n % 2 else ((n - 2) // 2 if s % 2 == 0 else n // 2 - 2)
        assert len(m.chords) == expected


def test_non_nice_rejected():
    assert not is_nice_matching(8, [(0, 2), (4, 6)])      # dual is not a path
    assert not is_nice_matching(6, [(0, 3), (1, 4)])      # crossing
    assert not is_nice_matching(8, [(0, 5)])              # hexagon face


def test_tilts_of_small_cycle():
    empty = parallel_class(4, 3)
    assert empty.chords == ()
    assert tilt(empty, Side.LEFT).edge_set == {(0, 2)}
    assert tilt(empty, Side.RIGHT).edge_set == {(1, 3)}
    assert tilt(parallel_class(4, 0), Side.LEFT).chords == ()


def test_tilt_rejects_non_matching():
    with pytest.raises(ValueError):
        tilt(NiceMatching(8, ((0, 2),), 2), Side.LEFT)


@pytest.mark.parametrize("n", range(5, 12))
def test_tilts_are_disjoint_neighbours(n):
    m = canonical_nice_matching(n)
    left, right = tilt(m, Side.LEFT), tilt(m, Side.RIGHT)
    assert not (left.edge_set & m.edge_set) and not (right.edge_set & m.edge_set)
    assert tilt(left, Side.RIGHT).edge_set == m.edge_set


@pytest.mark.parametrize("n,k,edges", [(8, 3, 21), (8, 2, 18), (7, 2, 15), (6, 2, 12), (6, 3, 14)])
def test_zigzag_counts(n, k, edges):
    d, col = build_zigzag(n, k)
    assert len(d.edges) == edges
    assert validate(d, col).ok and is_saturated(d, col, k)


def test_zigzag_classes_disjoint_and_refusals():
    classes = zigzag_classes(10, 4)
    assert sum(map(len, classes)) == len(set().union(*classes))
    with pytest.raises(ValueError, match="k <= n/2"):
        build_zigzag(6, 4)
    with pytest.raises(ValueError):
        build_zigzag(4, 2)


def test_face_sizes():
    d, col = build_zigzag(8, 3)
    assert all(v <= 4 for v in check_face_sizes(d, col).values())
    nonconvex = Drawing((point(0, 0), point(4, 0), point(0, 4), point(1, 1)), frozenset(), 2)
    with pytest.raises(ValueError):
        check_face_sizes(nonconvex, {})


def test_bounds_values():
    b = bounds(8, 2)
    assert (b.max_convex, b.precolored_min_upper, b.precolored_min_lower) == (18, 18, 18)
    b = bounds(10, 3)
    assert b.k3_precolored_lower == 19 and b.k3_free_lower == 27
    assert bounds(5, 3).precolored_min_upper is None
    assert bounds(4, 3).precolored_min_lower is None
    assert bounds(7, 2).k3_free_lower is None


@pytest.mark.parametrize("n", range(5, 13))
def test_two_color_bounds_agree(n):
    b = bounds(n, 2)
    assert b.precolored_min_upper == b.precolored_min_lower == b.max_convex == 3 * n - 6


def test_circle_drawing_convex():
    assert len(circle_points(9)) == 9
