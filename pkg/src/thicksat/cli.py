"""thicksat command line: validate, zigzag, saturate, enumerate, extend.

Exit codes: 0 success/valid, 1 invalid or refused, 2 parse error, 3 inconclusive.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import document, svg
from .convex import bounds, build_zigzag
from .drawing import Drawing, is_convex, outer_cycle, validate
from .extension import (RED, cells, counting_check, extend_edges,
                        red_inner_edges, saturate_theta2, triangulate_cells, verify_incidences)
from .oracle import CapExceeded, circular_k_coloring, enumerate_saturated
from .saturation import (DEFAULT_BUDGET, Inconclusive, SaturationMode, SearchBudget,
                         complete_blue_triangulation, greedy_saturate, is_saturated, k_colorable)

OK, INVALID, PARSE_ERROR, INCONCLUSIVE = 0, 1, 2, 3


def _load(path):
    try:
        return document.load(path)
    except OSError as exc:
        raise document.DocumentError(f"{path}: {exc.strerror}") from exc


def _write_svg(path, drawing, coloring, **kw):
    Path(path).write_text(svg.render(drawing, coloring, **kw), encoding="utf-8")


def cmd_validate(args) -> int:
    doc = _load(args.file)
    k = args.k or doc.drawing.k
    drawing = doc.drawing.with_k(k)
    coloring = doc.coloring
    if coloring is None:
        coloring = k_colorable(drawing, k, SearchBudget(args.budget))
        if coloring is None:
            print(f"no thickness-{k} coloring exists for this drawing")
            return INVALID
        print(f"uncolored input: found a thickness-{k} coloring")
    report = validate(drawing, coloring)
    print(report)
    return OK if report.ok else INVALID


def cmd_zigzag(args) -> int:
    try:
        drawing, coloring = build_zigzag(args.n, args.k)
    except ValueError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return INVALID
    document.dump(args.out, drawing, coloring)
    if args.svg:
        _write_svg(args.svg, drawing, coloring, title=f"zigzag n={args.n} k={args.k}")
    print(f"zigzag n={args.n} k={args.k}: {len(drawing.edges)} edges -> {args.out}")
    return OK


def _bound_lines(drawing: Drawing, k: int) -> list[str]:
    n = drawing.n
    lines = []
    if k == 2 and n >= 3:
        lines.append(f"saturated thickness-2 drawings have >= 3n-6 = {3 * n - 6} edges")
    if is_convex(drawing) and n >= 3:
        b = bounds(n, k)
        lines.append(f"convex maximum n + k(n-3) = {b.max_convex}")
        for name in ("precolored_min_upper", "precolored_min_lower",
                     "k3_precolored_lower", "k3_free_lower"):
            value = getattr(b, name)
            if value is not None:
                lines.append(f"{name.replace('_', ' ')} = {value}")
    return lines


def cmd_saturate(args) -> int:
    doc = _load(args.file)
    drawing = doc.drawing
    k = drawing.k
    mode = SaturationMode(args.mode)
    budget = SearchBudget(args.budget)
    coloring = doc.coloring
    if coloring is None:
        coloring = k_colorable(drawing, k, budget)
        if coloring is None:
            print(f"input has no thickness-{k} coloring", file=sys.stderr)
            return INVALID
    report = validate(drawing, coloring)
    if not report.ok:
        print(report, file=sys.stderr)
        return INVALID
    before = len(drawing.edges)
    if is_saturated(drawing, coloring, k, mode, budget):
        out, out_coloring = drawing, dict(coloring)
        print(f"already saturated ({mode.value}): {before} edges")
    else:
        if k == 2 and mode is SaturationMode.PRECOLORED and not is_convex(drawing):
            out, out_coloring = saturate_theta2(drawing, coloring)
        else:
            out, out_coloring = greedy_saturate(drawing, coloring, k, mode, budget)
        print(f"edges before: {before}")
        print(f"edges after:  {len(out.edges)}")
    for line in _bound_lines(out, k):
        print(line)
    document.dump(args.out, out, out_coloring)
    if args.svg:
        _write_svg(args.svg, out, out_coloring)
    return OK


def cmd_enumerate(args) -> int:
    mode = SaturationMode(args.mode)
    try:
        result = enumerate_saturated(args.n, args.k, mode, cap=args.cap)
    except CapExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return INVALID
    print(result.table())
    if args.witness_out:
        w = result.witness_min
        drawing, coloring = w.realize(args.k)
        if coloring is None:
            coloring = circular_k_coloring(args.n, w.chords, args.k)
        document.dump(args.witness_out, drawing, coloring)
        print(f"min witness -> {args.witness_out}")
    return OK


def cmd_extend(args) -> int:
    doc = _load(args.file)
    drawing, coloring = doc.drawing, doc.coloring
    if drawing.k != 2:
        print(f"extend needs a two-colored document, got k={drawing.k}", file=sys.stderr)
        return INVALID
    if coloring is None:
        print("extend needs every edge colored 1 (blue) or 2 (red)", file=sys.stderr)
        return INVALID
    report = validate(drawing, coloring)
    if not report.ok:
        print(report, file=sys.stderr)
        return INVALID
    if args.complete_blue:
        drawing, coloring = complete_blue_triangulation(drawing, coloring)
    reds = set(red_inner_edges(drawing, coloring))
    order = [e for e in doc.edge_order if e in reds] + sorted(reds - set(doc.edge_order))
    arr = extend_edges(drawing, coloring, order)
    cs = cells(arr)
    check = counting_check(arr, cs)
    incid = verify_incidences(arr, cs)
    tri, tri_coloring = triangulate_cells(drawing, coloring, arr)
    added = sorted(tri.edges - drawing.edges)
    n_prime = len(outer_cycle(drawing).order)
    print(f"red inner edges:        {check.red_edges}")
    print(f"cells:                  {len(cs)} (expected {check.red_edges + 1})")
    print(f"cell sizes:             {sorted((c.size for c in cs), reverse=True)}")
    print(f"incidences deg+1:       {'ok' if incid else 'FAILED'}")
    print(f"counting identity:      {check.lhs} = {check.rhs} "
          f"({'ok' if check.identity_holds else 'FAILED'})")
    print(f"red count >= n'-3:      {check.lhs} >= {n_prime - 3} "
          f"({'ok' if check.inequality_holds else 'FAILED'})")
    planned = sum(max(0, c.size - 3) for c in cs)
    print(f"cell diagonals:         {planned} ({planned - len(added)} already edges)")
    print(f"added red diagonals:    {len(added)}")
    if args.out_svg:
        _write_svg(args.out_svg, drawing, coloring, extensions=arr.extensions, cells=cs,
                   added=[e for e in added if tri_coloring[e] == RED])
    if args.out:
        document.dump(args.out, tri, tri_coloring)
    good = len(cs) == check.red_edges + 1 and incid and check.identity_holds
    return OK if good else INVALID


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="thicksat", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a document is a valid thickness-k drawing")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET.max_nodes)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("zigzag", help="write the precolored convex zigzag")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--svg")
    p.set_defaults(func=cmd_zigzag)

    p = sub.add_parser("saturate", help="add edges until saturated")
    p.add_argument("file")
    p.add_argument("--mode", choices=[m.value for m in SaturationMode], required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET.max_nodes)
    p.add_argument("--out", required=True)
    p.add_argument("--svg")
    p.set_defaults(func=cmd_saturate)

    p = sub.add_parser("enumerate", help="exhaustive min/max saturated search, convex position")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=[m.value for m in SaturationMode], required=True)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--witness-out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("extend", help="red edge extensions, cells and cell triangulation")
    p.add_argument("file")
    p.add_argument("--out-svg")
    p.add_argument("--out", help="write the drawing with the cell diagonals added")
    p.add_argument("--complete-blue", action="store_true",
                   help="first grow blue into a triangulation")
    p.set_defaults(func=cmd_extend)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except document.DocumentError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    except Inconclusive as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return INCONCLUSIVE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID


if __name__ == "__main__":
    sys.exit(main())
