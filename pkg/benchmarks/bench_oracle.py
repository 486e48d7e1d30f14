"""Compare the numba and numpy kernel backends on the convex enumeration.

The backend is fixed at import time, so each backend runs in its own
subprocess with THICKSAT_DISABLE_NUMBA set accordingly.  Each case is timed
after one warm-up call (which also pays numba's compile/cache load).

    python3 benchmarks/bench_oracle.py [--repeat 3]
"""
import argparse
import json
import os
import subprocess
import sys

CASES = [
    (8, 2, "precolored"),
    (9, 2, "precolored"),
    (8, 3, "precolored"),
    (8, 2, "free"),
    (7, 3, "free"),
    (6, 4, "free"),
]

WORKER = r"""
import json, sys, time
from thicksat import _accel
from thicksat.oracle import enumerate_saturated
from thicksat.saturation import SaturationMode, k_colorable
from thicksat.drawing import Drawing
from thicksat.geom import circle_points

cases, repeat = json.loads(sys.argv[1]), int(sys.argv[2])
rows = []
for n, k, mode in cases:
    m = SaturationMode(mode)
    t0 = time.perf_counter()
    r = enumerate_saturated(n, k, m, cap=n)
    first = time.perf_counter() - t0
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        enumerate_saturated(n, k, m, cap=n)
        best = min(best, time.perf_counter() - t0)
    rows.append([f"enumerate n={n} k={k} {mode}", first, best, [r.min_edges, r.max_edges, r.saturated_count]])
# coloring search on a complete convex graph (no 3-coloring exists for K8)
d = Drawing(circle_points(8), frozenset((u, v) for u in range(8) for v in range(u + 1, 8)), 3)
t0 = time.perf_counter(); res = k_colorable(d, 3); first = time.perf_counter() - t0
best = float("inf")
for _ in range(repeat):
    t0 = time.perf_counter(); k_colorable(d, 3); best = min(best, time.perf_counter() - t0)
rows.append(["dsatur K8 k=3", first, best, [res is None]])
print(json.dumps([_accel.backend(), rows]))
"""


def run_backend(disable: bool, repeat: int):
    env = dict(os.environ, THICKSAT_DISABLE_NUMBA="1" if disable else "0")
    out = subprocess.run([sys.executable, "-c", WORKER, json.dumps(CASES), str(repeat)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    results = {}
    for disable in (False, True):
        name, rows = run_backend(disable, args.repeat)
        results[name] = rows
    if "numba" not in results:
        print("numba is not installed; only the numpy backend was measured")
    names = list(results)
    header = f"{'case':34s}" + "".join(f"{n + ' first':>14s}{n + ' best':>13s}" for n in names)
    if len(names) == 2:
        header += f"{'speedup':>9s}"
    print(header)
    base = results[names[0]]
    for i, row in enumerate(base):
        line = f"{row[0]:34s}"
        for n in names:
            r = results[n][i]
            line += f"{r[1]:14.3f}{r[2]:13.4f}"
        if len(names) == 2:
            a, b = results["numba"][i], results["numpy"][i]
            if a[3] != b[3]:
                line += "  MISMATCH"
            else:
                line += f"{b[2] / max(a[2], 1e-9):8.1f}x"
        print(line)


if __name__ == "__main__":
    main()
