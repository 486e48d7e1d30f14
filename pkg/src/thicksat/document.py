"""Drawing documents: JSON with exact rational coordinates.

    {"version": "1", "k": 2,
     "vertices": [[0, 0], ["7/2", 3], ...],
     "edges": [[0, 1, 1], [1, 2, 2], ...]}

Edges carry a color either all together or not at all.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .drawing import Drawing, Edge, edge_key
from .geom import Point

VERSION = "1"
_RATIONAL = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


class DocumentError(ValueError):
    """A document that does not parse, with the offending field named."""


@dataclass(frozen=True)
class DrawingDocument:
    drawing: Drawing
    coloring: dict[Edge, int] | None
    edge_order: tuple[Edge, ...]
    version: str = VERSION


def parse_coordinate(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise DocumentError(f"{where}: expected an integer or 'p/q', got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL.match(value)
        if m:
            num, den = int(m.group(1)), int(m.group(2) or 1)
            if den == 0:
                raise DocumentError(f"{where}: zero denominator in {value!r}")
            return Fraction(num, den)
    raise DocumentError(f"{where}: expected an integer or 'p/q', got {value!r}")


def format_coordinate(q: Fraction):
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{where}: expected an integer, got {value!r}")
    return value


def from_dict(data) -> DrawingDocument:
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    missing = [key for key in ("k", "vertices", "edges") if key not in data]
    if missing:
        raise DocumentError(f"missing field(s): {', '.join(missing)}")
    version = str(data.get("version", VERSION))
    if version != VERSION:
        raise DocumentError(f"version: unsupported {version!r} (expected {VERSION!r})")
    k = _int(data["k"], "k")
    if k < 1:
        raise DocumentError(f"k: must be at least 1, got {k}")
    if not isinstance(data["vertices"], list):
        raise DocumentError("vertices: expected a list")
    verts = []
    for i, v in enumerate(data["vertices"]):
        if not isinstance(v, list) or len(v) != 2:
            raise DocumentError(f"vertices[{i}]: expected [x, y], got {v!r}")
        verts.append(Point(parse_coordinate(v[0], f"vertices[{i}][0]"),
                           parse_coordinate(v[1], f"vertices[{i}][1]")))
    if not isinstance(data["edges"], list):
        raise DocumentError("edges: expected a list")
    n = len(verts)
    order: list[Edge] = []
    colors: dict[Edge, int] = {}
    widths = set()
    for i, e in enumerate(data["edges"]):
        if not isinstance(e, list) or len(e) not in (2, 3):
            raise DocumentError(f"edges[{i}]: expected [u, v] or [u, v, color], got {e!r}")
        u, v = _int(e[0], f"edges[{i}][0]"), _int(e[1], f"edges[{i}][1]")
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise DocumentError(f"edges[{i}]: bad endpoints {u}, {v} for {n} vertices")
        key = edge_key(u, v)
        if key in colors or key in order:
            raise DocumentError(f"edges[{i}]: duplicate edge {key}")
        order.append(key)
        widths.add(len(e))
        if len(e) == 3:
            colors[key] = _int(e[2], f"edges[{i}][2]")
    if len(widths) > 1:
        raise DocumentError("edges: partial coloring (some edges have a color, some do not)")
    try:
        drawing = Drawing(tuple(verts), frozenset(order), k)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    # an edgeless document counts as (vacuously) colored
    return DrawingDocument(drawing, None if widths == {2} else colors, tuple(order), version)


def to_dict(drawing: Drawing, coloring=None, edge_order=None) -> dict:
    order = list(edge_order) if edge_order is not None else sorted(drawing.edges)
    if coloring is not None:
        edges = [[u, v, int(coloring[(u, v)])] for u, v in order]
    else:
        edges = [[u, v] for u, v in order]
    return {"version": VERSION, "k": drawing.k,
            "vertices": [[format_coordinate(p.x), format_coordinate(p.y)] for p in drawing.vertices],
            "edges": edges}


def loads(text: str) -> DrawingDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return from_dict(data)


def dumps(drawing: Drawing, coloring=None, edge_order=None) -> str:
    """JSON text with one vertex or edge per line."""
    data = to_dict(drawing, coloring, edge_order)

    def rows(items):
        if not items:
            return "[]"
        return "[\n  " + ",\n  ".join(json.dumps(x) for x in items) + "\n ]"

    return (f'{{\n "version": {json.dumps(data["version"])},\n "k": {data["k"]},\n'
            f' "vertices": {rows(data["vertices"])},\n "edges": {rows(data["edges"])}\n}}\n')


def load(path) -> DrawingDocument:
    return loads(Path(path).read_text(encoding="utf-8"))


def dump(path, drawing: Drawing, coloring=None, edge_order=None):
    Path(path).write_text(dumps(drawing, coloring, edge_order), encoding="utf-8")
