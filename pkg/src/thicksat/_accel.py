"""Integer kernels behind the coloring search and the convex enumeration.

Every kernel has a numba-compiled path and a pure numpy path.  Setting
``THICKSAT_DISABLE_NUMBA=1`` (or running without numba installed) selects the
numpy path; both return identical results.
"""
from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is an optional speedup
    numba = None


def _numba_requested() -> bool:
    return os.environ.get("THICKSAT_DISABLE_NUMBA", "").strip().lower() not in ("1", "true", "yes")


USE_NUMBA = numba is not None and _numba_requested()


def _maybe_jit(fn):
    return numba.njit(cache=True)(fn) if USE_NUMBA else fn


def _dsatur_py(indptr, indices, degree, k, max_nodes):
    """Exact k-coloring by backtracking in DSATUR order.

    Returns (status, colors, nodes) with status 1 = colored, 0 = no coloring
    exists, -1 = node budget exhausted.  Colors are 0-based.  A vertex may
    only open the next unused color, which removes color-permutation symmetry.
    """
    m = indptr.shape[0] - 1
    colors = np.full(m, -1, np.int64)
    chosen = np.zeros(m + 1, np.int64)
    used = np.zeros(m + 1, np.int64)
    sat = np.zeros((max(m, 1), max(k, 1)), np.int64)
    nodes = 0
    depth = 0
    fresh = True
    while True:
        if depth == m:
            return 1, colors, nodes
        if fresh:
            best = -1
            best_s = -1
            best_d = -1
            for v in range(m):
                if colors[v] < 0:
                    s = 0
                    for c in range(k):
                        if sat[v, c] > 0:
                            s += 1
                    if s > best_s or (s == best_s and degree[v] > best_d):
                        best = v
                        best_s = s
                        best_d = degree[v]
            chosen[depth] = best
        v = chosen[depth]
        c = colors[v]
        if c >= 0:
            for p in range(indptr[v], indptr[v + 1]):
                sat[indices[p], c] -= 1
            colors[v] = -1
        limit = min(k, used[depth] + 1)
        c += 1
        while c < limit and sat[v, c] > 0:
            c += 1
        nodes += 1
        if nodes > max_nodes:
            return -1, colors, nodes
        if c < limit:
            colors[v] = c
            for p in range(indptr[v], indptr[v + 1]):
                sat[indices[p], c] += 1
            used[depth + 1] = max(used[depth], c + 1)
            depth += 1
            fresh = True
        else:
            depth -= 1
            fresh = False
            if depth < 0:
                return 0, colors, nodes


dsatur = _maybe_jit(_dsatur_py)


def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


_popcount_jit = _maybe_jit(_popcount)


def _scan_precolored_py(masks, blocked, sizes, full, k, out):
    """Walk all non-decreasing k-tuples of pairwise disjoint plane chord sets.

    A tuple is saturated when every absent chord is crossed by every class,
    i.e. ``absent & ~blocked_i == 0`` for all i.  Saturated tuples are written
    to ``out`` while it has room.  Returns (examined, saturated, min_size,
    max_size, argmin, argmax) with sizes counted in chords.
    """
    d_count = masks.shape[0]
    idx = np.zeros(k, np.int64)
    union = np.zeros(k + 1, np.int64)
    inter = np.zeros(k + 1, np.int64)
    size = np.zeros(k + 1, np.int64)
    inter[0] = full
    arg_min = np.zeros(k, np.int64)
    arg_max = np.zeros(k, np.int64)
    lo = 1 << 62
    hi = -1
    examined = 0
    saturated = 0
    depth = 0
    idx[0] = -1
    while depth >= 0:
        idx[depth] += 1
        if idx[depth] >= d_count:
            depth -= 1
            continue
        j = idx[depth]
        if masks[j] & union[depth]:
            continue
        union[depth + 1] = union[depth] | masks[j]
        inter[depth + 1] = inter[depth] & blocked[j]
        size[depth + 1] = size[depth] + sizes[j]
        if depth + 1 < k:
            depth += 1
            idx[depth] = j - 1
            continue
        examined += 1
        absent = full & ~union[k]
        if absent & ~inter[k]:
            continue
        if saturated < out.shape[0]:
            for t in range(k):
                out[saturated, t] = idx[t]
        saturated += 1
        s = size[k]
        if s < lo:
            lo = s
            for t in range(k):
                arg_min[t] = idx[t]
        if s > hi:
            hi = s
            for t in range(k):
                arg_max[t] = idx[t]
    return examined, saturated, lo, hi, arg_min, arg_max


def _scan_precolored_np(masks, blocked, sizes, full, k, out):
    d_count = masks.shape[0]
    arg_min = np.zeros(k, np.int64)
    arg_max = np.zeros(k, np.int64)
    state = {"lo": 1 << 62, "hi": -1, "examined": 0, "saturated": 0}

    def leaf(prefix, start, union, inter, size):
        cand = np.arange(start, d_count)
        ok = (masks[start:] & union) == 0
        cand = cand[ok]
        u = union | masks[cand]
        inner = inter & blocked[cand]
        s = size + sizes[cand]
        state["examined"] += cand.size
        absent = full & ~u
        hit = cand[(absent & ~inner) == 0]
        hit_sizes = s[(absent & ~inner) == 0]
        if hit.size == 0:
            return
        room = out.shape[0] - state["saturated"]
        if room > 0:
            take = min(room, hit.size)
            row = state["saturated"]
            out[row:row + take, :len(prefix)] = prefix
            out[row:row + take, len(prefix)] = hit[:take]
        state["saturated"] += hit.size
        i_min = int(np.argmin(hit_sizes))
        i_max = int(np.argmax(hit_sizes))
        if hit_sizes[i_min] < state["lo"]:
            state["lo"] = int(hit_sizes[i_min])
            arg_min[:] = prefix + [int(hit[i_min])]
        if hit_sizes[i_max] > state["hi"]:
            state["hi"] = int(hit_sizes[i_max])
            arg_max[:] = prefix + [int(hit[i_max])]

    def walk(prefix, start, union, inter, size):
        if len(prefix) == k - 1:
            leaf(prefix, start, union, inter, size)
            return
        for j in range(start, d_count):
            if masks[j] & union:
                continue
            walk(prefix + [j], j, union | masks[j], inter & blocked[j], size + sizes[j])

    walk([], 0, np.int64(0), np.int64(full), np.int64(0))
    return (state["examined"], state["saturated"], state["lo"], state["hi"], arg_min, arg_max)


def _scan_unions_py(masks, k, out):
    """Unions of all non-decreasing k-tuples of pairwise disjoint plane sets.

    Writes unions into ``out`` while there is room and returns the total count.
    """
    d_count = masks.shape[0]
    idx = np.zeros(k, np.int64)
    union = np.zeros(k + 1, np.int64)
    total = 0
    depth = 0
    idx[0] = -1
    while depth >= 0:
        idx[depth] += 1
        if idx[depth] >= d_count:
            depth -= 1
            continue
        j = idx[depth]
        if masks[j] & union[depth]:
            continue
        union[depth + 1] = union[depth] | masks[j]
        if depth + 1 < k:
            depth += 1
            idx[depth] = j - 1
            continue
        if total < out.shape[0]:
            out[total] = union[k]
        total += 1
    return total


def _scan_unions_np(masks, k, out):
    chunks = []

    def walk(depth, start, union):
        if depth == k - 1:
            tail = masks[start:]
            chunks.append(union | tail[(tail & union) == 0])
            return
        for j in range(start, masks.shape[0]):
            if masks[j] & union:
                continue
            walk(depth + 1, j, union | masks[j])

    walk(0, 0, np.int64(0))
    allu = np.concatenate(chunks) if chunks else np.zeros(0, np.int64)
    take = min(out.shape[0], allu.size)
    out[:take] = allu[:take]
    return allu.size


def _dihedral_min_py(masks, perms):
    """Smallest image of each chord mask under the given chord permutations."""
    best = masks.copy()
    n_sym, d_count = perms.shape
    for i in range(masks.shape[0]):
        m = masks[i]
        b = m
        for g in range(n_sym):
            img = 0
            for j in range(d_count):
                if (m >> j) & 1:
                    img |= 1 << perms[g, j]
            if img < b:
                b = img
        best[i] = b
    return best


def _dihedral_min_np(masks, perms):
    best = masks.copy()
    one = np.int64(1)
    for g in range(perms.shape[0]):
        img = np.zeros_like(masks)
        for j in range(perms.shape[1]):
            img |= ((masks >> j) & one) << np.int64(perms[g, j])
        np.minimum(best, img, out=best)
    return best


if USE_NUMBA:
    scan_precolored = numba.njit(cache=True)(_scan_precolored_py)
    scan_unions = numba.njit(cache=True)(_scan_unions_py)
    dihedral_min = numba.njit(cache=True)(_dihedral_min_py)
else:
    scan_precolored = _scan_precolored_np
    scan_unions = _scan_unions_np
    dihedral_min = _dihedral_min_np


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"
