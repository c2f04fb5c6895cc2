"""Hot loops for the state sum and the GF(2) linear algebra.

Everything here works on flat numpy arrays so the same source compiles
under numba.  Backend selection: ``GAUSSFORGE_KERNELS=numba`` (default if
numba imports) or ``GAUSSFORGE_KERNELS=python`` for the pure numpy/Python
fallback.  Both backends stay importable so the benchmark can compare them.

State-circle model: a closed diagram with n chords has 2n boundary arcs
(arc k runs from endpoint k to endpoint k+1 mod 2n) and 4n arc-end nodes.
Node 2k is the start of arc k, node 2k+1 its end; the two ends of one arc
start out merged.  Smoothing a chord (u, v) merges arc-ends in one of two
patterns:

* oriented     -- in(u)<->out(v), in(v)<->out(u)
* disoriented  -- in(u)<->in(v),  out(u)<->out(v)

where in(p) is the arriving end at endpoint p and out(p) the departing
one.  A positive marker smooths oriented on a positive chord and
disoriented on a negative chord; a negative marker does the opposite.
Circles of the state = connected components.
"""

from __future__ import annotations

import os

import numpy as np

_ENV = os.environ.get("GAUSSFORGE_KERNELS", "").strip().lower()


def _find(parent: np.ndarray, x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _union(parent: np.ndarray, a: int, b: int) -> None:
    ra = _find(parent, a)
    rb = _find(parent, b)
    if ra != rb:
        parent[rb] = ra


def _smooth_mask(
    n: int,
    in_u: np.ndarray,
    out_u: np.ndarray,
    in_v: np.ndarray,
    out_v: np.ndarray,
    positive: np.ndarray,
    mask: int,
    parent: np.ndarray,
) -> None:
    for k in range(2 * n):
        parent[2 * k] = 2 * k
        parent[2 * k + 1] = 2 * k
    for c in range(n):
        marker_pos = (mask >> c) & 1 == 1
        if marker_pos == positive[c]:  # oriented smoothing
            _union(parent, in_u[c], out_v[c])
            _union(parent, in_v[c], out_u[c])
        else:
            _union(parent, in_u[c], in_v[c])
            _union(parent, out_u[c], out_v[c])


def state_census(
    n: int,
    in_u: np.ndarray,
    out_u: np.ndarray,
    in_v: np.ndarray,
    out_v: np.ndarray,
    positive: np.ndarray,
) -> np.ndarray:
    """Histogram over all 2^n markers: hist[#positive, #circles] += 1."""
    hist = np.zeros((n + 1, n + 2), dtype=np.int64)
    parent = np.empty(4 * n, dtype=np.int64)
    for mask in range(1 << n):
        _smooth_mask(n, in_u, out_u, in_v, out_v, positive, mask, parent)
        circles = 0
        for x in range(4 * n):
            if _find(parent, x) == x:
                circles += 1
        pop = 0
        m = mask
        while m:
            m &= m - 1
            pop += 1
        hist[pop, circles] += 1
    return hist


def circle_tables(
    n: int,
    in_u: np.ndarray,
    out_u: np.ndarray,
    in_v: np.ndarray,
    out_v: np.ndarray,
    positive: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """Per-mask circle count and per-arc circle index for all 2^n markers.

    Circles are indexed canonically by smallest member arc.
    """
    n_masks = 1 << n
    counts = np.zeros(n_masks, dtype=np.int64)
    labels = np.zeros((n_masks, max(2 * n, 1)), dtype=np.int64)
    parent = np.empty(4 * n, dtype=np.int64)
    relabel = np.empty(4 * n, dtype=np.int64)
    for mask in range(n_masks):
        _smooth_mask(n, in_u, out_u, in_v, out_v, positive, mask, parent)
        relabel[:] = -1
        nxt = 0
        for arc in range(2 * n):
            root = _find(parent, 2 * arc)
            if relabel[root] < 0:
                relabel[root] = nxt
                nxt += 1
            labels[mask, arc] = relabel[root]
        counts[mask] = nxt
    return counts, labels


def gf2_rank_words(rows: np.ndarray, ncols: int) -> int:
    """Rank over GF(2) of a bit-packed matrix (one uint64 row-chunk per row)."""
    m = rows.copy()
    nrows = m.shape[0]
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        w = col >> 6
        bit = np.uint64(col & 63)
        pivot = -1
        for i in range(r, nrows):
            if (m[i, w] >> bit) & np.uint64(1):
                pivot = i
                break
        if pivot < 0:
            continue
        if pivot != r:
            for j in range(m.shape[1]):
                tmp = m[r, j]
                m[r, j] = m[pivot, j]
                m[pivot, j] = tmp
        for i in range(nrows):
            if i != r and ((m[i, w] >> bit) & np.uint64(1)):
                for j in range(m.shape[1]):
                    m[i, j] ^= m[r, j]
        r += 1
    return r


def _gf2_rank_words_numpy(rows: np.ndarray, ncols: int) -> int:
    """Vectorized-over-rows elimination for the fallback backend."""
    m = rows.copy()
    nrows = m.shape[0]
    r = 0
    one = np.uint64(1)
    for col in range(ncols):
        if r == nrows:
            break
        w, b = divmod(col, 64)
        bit = np.uint64(b)
        live = np.nonzero((m[r:, w] >> bit) & one)[0]
        if live.size == 0:
            continue
        p = r + int(live[0])
        if p != r:
            m[[r, p]] = m[[p, r]]
        hit = ((m[:, w] >> bit) & one).astype(bool)
        hit[r] = False
        m[hit] ^= m[r]
        r += 1
    return r


_PY_IMPLS = {
    "state_census": state_census,
    "circle_tables": circle_tables,
    "gf2_rank_words": _gf2_rank_words_numpy,
}


def _compile_numba():
    from numba import njit

    find = njit(cache=True)(_find)
    union = njit(cache=True)(_union)

    def _bind(fn, globs):
        # njit against the jitted helpers instead of the python ones
        code = fn.__code__
        import types

        g = dict(fn.__globals__)
        g.update(globs)
        return types.FunctionType(code, g, fn.__name__, fn.__defaults__)

    smooth = njit(cache=True)(_bind(_smooth_mask, {"_find": find, "_union": union}))
    env = {"_find": find, "_union": union, "_smooth_mask": smooth}
    return {
        "state_census": njit(cache=True)(_bind(state_census, env)),
        "circle_tables": njit(cache=True)(_bind(circle_tables, env)),
        "gf2_rank_words": njit(cache=True)(gf2_rank_words),
    }


def _select_backend() -> tuple[str, dict]:
    if _ENV == "python":
        return "python", _PY_IMPLS
    try:
        impls = _compile_numba()
        return "numba", impls
    except Exception:
        if _ENV == "numba":
            raise
        return "python", _PY_IMPLS


BACKEND, _IMPLS = _select_backend()

census_kernel = _IMPLS["state_census"]
circle_tables_kernel = _IMPLS["circle_tables"]
rank_kernel = _IMPLS["gf2_rank_words"]


def chord_nodes(
    chords: tuple[tuple[int, int, int], ...]
) -> tuple[int, np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Flatten closed-diagram chords into the arc-end node arrays."""
    n = len(chords)
    in_u = np.empty(n, dtype=np.int64)
    out_u = np.empty(n, dtype=np.int64)
    in_v = np.empty(n, dtype=np.int64)
    out_v = np.empty(n, dtype=np.int64)
    positive = np.empty(n, dtype=np.bool_)
    for c, (u, v, sign) in enumerate(chords):
        in_u[c] = 2 * ((u - 1) % (2 * n)) + 1
        out_u[c] = 2 * u
        in_v[c] = 2 * ((v - 1) % (2 * n)) + 1
        out_v[c] = 2 * v
        positive[c] = sign > 0
    return n, in_u, out_u, in_v, out_v, positive
