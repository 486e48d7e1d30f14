import random
from itertools import product

import pytest

from thicksat.drawing import Drawing, all_pairs, outer_cycle, validate
from thicksat.geom import circle_points, point
from thicksat.saturation import (BLUE, RED, Inconclusive, SaturationMode, SearchBudget,
                                 addable_colors_precolored, complete_blue_triangulation,
                                 greedy_saturate, is_saturated, k_colorable)

from _instances import random_colored, random_points

SQUARE = (point(0, 0), point(4, 0), point(4, 4), point(0, 4))
CYCLE = frozenset({(0, 1), (1, 2), (2, 3), (0, 3)})


def test_addable_colors():
    d = Drawing(SQUARE, CYCLE | {(0, 2)}, 2)
    col = {e: 1 for e in d.edges}
    assert addable_colors_precolored(d, col, (1, 3)) == {2}
    with pytest.raises(ValueError):
        addable_colors_precolored(d, col, (0, 2))


def test_precolored_vs_free_differ():
    # one diagonal blocks the other only while there is no second color
    d = Drawing(SQUARE, CYCLE | {(0, 2)}, 1)
    col = {e: 1 for e in d.edges}
    assert is_saturated(d, col, 1, SaturationMode.PRECOLORED)
    assert is_saturated(d, col, 1, SaturationMode.FREE)
    d2 = d.with_k(2)
    assert not is_saturated(d2, col, 2, SaturationMode.PRECOLORED)


def test_free_mode_adds_what_precolored_cannot():
    # hexagon: (0, 3) crosses the nested pair (1, 5), (2, 4), which are colored differently
    d = Drawing(circle_points(6), frozenset({(1, 5), (2, 4)}), 2)
    col = {(1, 5): 1, (2, 4): 2}
    assert addable_colors_precolored(d, col, (0, 3)) == set()
    assert k_colorable(d.with_edges([(0, 3)]), 2) is not None
    pre, _ = greedy_saturate(d, col, 2, SaturationMode.PRECOLORED)
    free, _ = greedy_saturate(d, col, 2, SaturationMode.FREE)
    assert (0, 3) not in pre.edges and (0, 3) in free.edges


def test_three_long_diagonals_need_three_colors():
    tri = Drawing(circle_points(6), frozenset({(0, 3), (1, 4), (2, 5)}), 2)
    assert k_colorable(tri, 2) is None and k_colorable(tri, 3) is not None


def _brute_colorable(d, k):
    edges = sorted(d.edges)
    return any(validate(d.with_k(k), dict(zip(edges, (c + 1 for c in cs)))).ok
               for cs in product(range(k), repeat=len(edges)))


def test_k_colorable_matches_brute_force():
    rng = random.Random(11)
    for _ in range(60):
        pts = random_points(rng, rng.randint(4, 7))
        pairs = all_pairs(len(pts))
        rng.shuffle(pairs)
        k = rng.randint(1, 3)
        d = Drawing(pts, frozenset(pairs[:rng.randint(0, 8)]), k)
        got = k_colorable(d, k)
        assert (got is not None) == _brute_colorable(d, k)
        if got is not None:
            assert validate(d, got).ok


def test_k_colorable_budget():
    d = Drawing(circle_points(9), frozenset(all_pairs(9)), 3)
    with pytest.raises(Inconclusive):
        k_colorable(d, 3, SearchBudget(max_nodes=5))
    with pytest.raises(ValueError):
        SearchBudget(0)


@pytest.mark.parametrize("mode", list(SaturationMode))
def test_greedy_saturate_produces_saturated(mode):
    rng = random.Random(17)
    for _ in range(25):
        n, k = rng.randint(4, 8), rng.randint(1, 3)
        d, col = random_colored(rng, random_points(rng, n), k)
        out, out_col = greedy_saturate(d, col, k, mode)
        assert validate(out, out_col).ok
        assert d.edges <= out.edges
        assert is_saturated(out, out_col, k, mode)
        if mode is SaturationMode.PRECOLORED:
            assert all(out_col[e] == col[e] for e in col)


def test_greedy_saturate_is_idempotent():
    rng = random.Random(23)
    d, col = random_colored(rng, random_points(rng, 7), 2)
    out, out_col = greedy_saturate(d, col, 2)
    again, again_col = greedy_saturate(out, out_col, 2)
    assert again == out and again_col == out_col


def test_complete_blue_triangulation():
    rng = random.Random(29)
    for _ in range(30):
        n = rng.randint(4, 10)
        d, col = random_colored(rng, random_points(rng, n), 2)
        out, out_col = complete_blue_triangulation(d, col)
        assert validate(out, out_col).ok
        blue = {e for e, c in out_col.items() if c == BLUE}
        hull = len(outer_cycle(d).order)
        assert len(blue) == 3 * n - 3 - hull
        # no red edges created, no edges dropped
        assert {e for e, c in out_col.items() if c == RED} <= {e for e, c in col.items() if c == RED}
        assert d.edges <= out.edges


def test_empty_k4_saturates_to_six():
    pts = (point(0, 0), point(6, 0), point(2, 5), point(3, 2))
    out, out_col = greedy_saturate(Drawing(pts, frozenset(), 2), {}, 2)
    assert len(out.edges) == 6
