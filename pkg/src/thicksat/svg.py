"""Deterministic SVG rendering of drawings, extension arrangements and cells."""
from __future__ import annotations

import colorsys
from typing import Iterable, Sequence

from .drawing import Coloring, Drawing, Edge

PALETTE = ["#1f5fbf", "#d62728", "#2ca02c"]
UNCOLORED = "#444444"


def color_hex(c: int) -> str:
    """Stroke color for class c (1-based): blue, red, green, then golden-angle hues."""
    if c <= len(PALETTE):
        return PALETTE[c - 1]
    h = ((c - len(PALETTE)) * 0.381966 + 0.08) % 1.0
    r, g, b = colorsys.hls_to_rgb(h, 0.42, 0.65)
    return "#{:02x}{:02x}{:02x}".format(round(r * 255), round(g * 255), round(b * 255))


class _Frame:
    def __init__(self, points, size: int, margin: int):
        xs = [float(p[0]) for p in points] or [0.0]
        ys = [float(p[1]) for p in points] or [0.0]
        self.x0, self.y1 = min(xs), max(ys)
        span = max(max(xs) - self.x0, self.y1 - min(ys), 1e-9)
        self.scale = (size - 2 * margin) / span
        self.margin = margin
        self.width = round((max(xs) - self.x0) * self.scale) + 2 * margin
        self.height = round((self.y1 - min(ys)) * self.scale) + 2 * margin

    def __call__(self, p) -> str:
        x = (float(p[0]) - self.x0) * self.scale + self.margin
        y = (self.y1 - float(p[1])) * self.scale + self.margin
        return f"{x:.2f},{y:.2f}"

    def xy(self, p) -> tuple[str, str]:
        return tuple(self(p).split(","))


def _line(frame, a, b, extra="") -> str:
    (x1, y1), (x2, y2) = frame.xy(a), frame.xy(b)
    return f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"{extra}/>'


def render(drawing: Drawing, coloring: Coloring | None = None, *,
           extensions: Sequence = (), cells: Sequence = (),
           added: Iterable[Edge] = (), size: int = 520, margin: int = 28,
           title: str | None = None) -> str:
    """SVG 1.1 text; one group per color class, extensions dashed in their own group.

    ``cells`` are shaded and labelled with their size; ``added`` edges are drawn
    dotted in the red class style.
    """
    pts = drawing.vertices
    frame = _Frame(list(pts), size, margin)
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{frame.width}" height="{frame.height}" '
           f'viewBox="0 0 {frame.width} {frame.height}">']
    if title:
        out.append(f"<title>{title}</title>")
    out.append(f'<rect width="{frame.width}" height="{frame.height}" fill="white"/>')
    if cells:
        out.append('<g id="cells" stroke="none">')
        for i, c in enumerate(cells):
            shade = "#f2e6c9" if i % 2 == 0 else "#e3edd5"
            poly = " ".join(frame(p) for p in c.boundary)
            out.append(f'<polygon points="{poly}" fill="{shade}"/>')
        for c in cells:
            cx = sum(float(p[0]) for p in c.boundary) / len(c.boundary)
            cy = sum(float(p[1]) for p in c.boundary) / len(c.boundary)
            x, y = frame.xy((cx, cy))
            out.append(f'<text x="{x}" y="{y}" font-family="sans-serif" font-size="12" '
                       f'text-anchor="middle" fill="#555555">{c.size}</text>')
        out.append("</g>")
    if extensions:
        out.append('<g id="extensions" stroke="#d62728" stroke-width="1.2" '
                   'stroke-dasharray="5,4" stroke-opacity="0.8">')
        out.extend(_line(frame, a, b) for a, b in extensions)
        out.append("</g>")
    edges = sorted(drawing.edges)
    if coloring is None:
        out.append(f'<g id="edges" stroke="{UNCOLORED}" stroke-width="1.6">')
        out.extend(_line(frame, pts[u], pts[v]) for u, v in edges)
        out.append("</g>")
    else:
        for c in sorted(set(coloring.values())):
            out.append(f'<g id="color-{c}" stroke="{color_hex(c)}" stroke-width="1.8">')
            out.extend(_line(frame, pts[u], pts[v]) for u, v in edges if coloring[(u, v)] == c)
            out.append("</g>")
    added = sorted(added)
    if added:
        out.append(f'<g id="added" stroke="{color_hex(2)}" stroke-width="1.8" '
                   'stroke-dasharray="2,3">')
        out.extend(_line(frame, pts[u], pts[v]) for u, v in added)
        out.append("</g>")
    out.append('<g id="vertices" fill="black">')
    for i, p in enumerate(pts):
        x, y = frame.xy(p)
        out.append(f'<circle cx="{x}" cy="{y}" r="3.5"><title>{i}</title></circle>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
