"""Random instance generators shared by the test modules."""
from __future__ import annotations

import random

from thicksat.drawing import Drawing, all_pairs
from thicksat.geom import circle_points, general_position, point
from thicksat.saturation import SaturationMode, greedy_saturate


def random_points(rng: random.Random, n: int, span: int = 40):
    while True:
        pts = list({point(rng.randint(0, span), rng.randint(0, span)) for _ in range(n)})
        if len(pts) == n and general_position(pts):
            return tuple(pts)


def random_colored(rng: random.Random, pts, k: int, density: float | None = None):
    """Random pairs, each given a random color when that keeps the coloring valid."""
    d = Drawing(tuple(pts), frozenset(), k)
    pairs = all_pairs(len(pts))
    rng.shuffle(pairs)
    take = rng.randint(0, len(pairs)) if density is None else int(density * len(pairs))
    coloring: dict = {}
    for uv in pairs[:take]:
        c = rng.randint(1, k)
        if all(coloring[e] != c or not d.crosses(uv, e) for e in coloring):
            coloring[uv] = c
    return Drawing(tuple(pts), frozenset(coloring), k), coloring


def random_theta2(rng: random.Random, n: int):
    return random_colored(rng, random_points(rng, n), 2)


def random_saturated_convex(rng: random.Random, n: int, k: int):
    """Greedy precolored saturation of a random partial coloring, random candidate order."""
    d, coloring = random_colored(rng, circle_points(n), k, density=rng.random() * 0.5)
    order = all_pairs(n)
    rng.shuffle(order)
    return greedy_saturate(d, coloring, k, SaturationMode.PRECOLORED, candidate_order=order)
