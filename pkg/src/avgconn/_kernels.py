"""Max-flow kernels for local vertex- and edge-connectivity.

The kernels are written once as plain Python over numpy arrays.  At import
time they are compiled with numba unless numba is missing or the environment
variable ``AVGCONN_DISABLE_NUMBA`` is set to a true value; the interpreted
functions stay available as :data:`python` either way.

Networks are stored in CSR form: ``indptr``/``head`` give the arcs leaving
each node, ``cap`` the capacities and ``rev`` the index of the paired
reverse arc.  Vertex mode splits vertex v into ``2v`` (in) and ``2v+1``
(out) joined by a unit arc.
"""

from __future__ import annotations

import os
import types
from types import SimpleNamespace

import numpy as np

VERTEX = 0
EDGE = 1

_TRUE = {"1", "true", "yes", "on"}


def numba_disabled() -> bool:
    return os.environ.get("AVGCONN_DISABLE_NUMBA", "").strip().lower() in _TRUE


def build_network(mat, mode):
    n = mat.shape[0]
    nn = 2 * n if mode == 0 else n
    cnt = np.zeros(nn + 1, dtype=np.int64)
    if mode == 0:
        for v in range(n):
            cnt[2 * v] += 1
            cnt[2 * v + 1] += 1
    for a in range(n):
        for b in range(a + 1, n):
            if mat[a, b] > 0:
                if mode == 0:
                    cnt[2 * a + 1] += 1
                    cnt[2 * b] += 1
                    cnt[2 * b + 1] += 1
                    cnt[2 * a] += 1
                else:
                    cnt[a] += 1
                    cnt[b] += 1
    indptr = np.zeros(nn + 1, dtype=np.int64)
    for i in range(nn):
        indptr[i + 1] = indptr[i] + cnt[i]
    total = indptr[nn]
    head = np.zeros(total, dtype=np.int64)
    cap = np.zeros(total, dtype=np.int64)
    rev = np.zeros(total, dtype=np.int64)
    cur = indptr[:nn].copy()
    pair_arc = -np.ones((n, n), dtype=np.int64)
    if mode == 0:
        for v in range(n):
            x = 2 * v
            y = 2 * v + 1
            px = cur[x]
            cur[x] += 1
            py = cur[y]
            cur[y] += 1
            head[px] = y
            cap[px] = 1
            head[py] = x
            rev[px] = py
            rev[py] = px
    for a in range(n):
        for b in range(a + 1, n):
            c = mat[a, b]
            if c <= 0:
                continue
            if mode == 0:
                for k in range(2):
                    s = a if k == 0 else b
                    t = b if k == 0 else a
                    x = 2 * s + 1
                    y = 2 * t
                    px = cur[x]
                    cur[x] += 1
                    py = cur[y]
                    cur[y] += 1
                    head[px] = y
                    cap[px] = c
                    head[py] = x
                    rev[px] = py
                    rev[py] = px
                    pair_arc[s, t] = px
            else:
                px = cur[a]
                cur[a] += 1
                py = cur[b]
                cur[b] += 1
                head[px] = b
                cap[px] = c
                head[py] = a
                cap[py] = c
                rev[px] = py
                rev[py] = px
                pair_arc[a, b] = px
                pair_arc[b, a] = py
    return indptr, head, cap, rev, pair_arc


def max_flow(indptr, head, res, rev, s, t, limit, parent, queue):
    """Augment along shortest residual paths; stop early once flow >= limit > 0."""
    nn = indptr.shape[0] - 1
    flow = 0
    while limit <= 0 or flow < limit:
        for i in range(nn):
            parent[i] = -1
        parent[s] = -2
        qh = 0
        qt = 1
        queue[0] = s
        found = False
        while qh < qt and not found:
            x = queue[qh]
            qh += 1
            for a in range(indptr[x], indptr[x + 1]):
                if res[a] > 0:
                    y = head[a]
                    if parent[y] == -1:
                        parent[y] = a
                        if y == t:
                            found = True
                            break
                        queue[qt] = y
                        qt += 1
        if not found:
            break
        bott = -1
        y = t
        while y != s:
            a = parent[y]
            if bott < 0 or res[a] < bott:
                bott = res[a]
            y = head[rev[a]]
        if limit > 0 and bott > limit - flow:
            bott = limit - flow
        y = t
        while y != s:
            a = parent[y]
            res[a] -= bott
            res[rev[a]] += bott
            y = head[rev[a]]
        flow += bott
    return flow


def _pair_value(mat, mode, indptr, head, cap, rev, pair_arc, u, v, limit, res, parent, queue):
    # limit > 0: the answer may be truncated at limit.
    for i in range(cap.shape[0]):
        res[i] = cap[i]
    if mode == 0:
        direct = mat[u, v]
        if direct > 0:
            res[pair_arc[u, v]] = 0
            res[pair_arc[v, u]] = 0
        if limit > 0:
            if direct >= limit:
                return direct
            return direct + max_flow(indptr, head, res, rev, 2 * u + 1, 2 * v, limit - direct, parent, queue)
        return direct + max_flow(indptr, head, res, rev, 2 * u + 1, 2 * v, 0, parent, queue)
    return max_flow(indptr, head, res, rev, u, v, limit, parent, queue)


def local_value(mat, mode, u, v, limit):
    indptr, head, cap, rev, pair_arc = build_network(mat, mode)
    nn = indptr.shape[0] - 1
    res = np.zeros(cap.shape[0], dtype=np.int64)
    parent = np.zeros(nn, dtype=np.int64)
    queue = np.zeros(nn, dtype=np.int64)
    return _pair_value(mat, mode, indptr, head, cap, rev, pair_arc, u, v, limit, res, parent, queue)


def all_pairs(mat, mode):
    n = mat.shape[0]
    out = np.zeros((n, n), dtype=np.int64)
    indptr, head, cap, rev, pair_arc = build_network(mat, mode)
    nn = indptr.shape[0] - 1
    res = np.zeros(cap.shape[0], dtype=np.int64)
    parent = np.zeros(nn, dtype=np.int64)
    queue = np.zeros(nn, dtype=np.int64)
    for u in range(n):
        for v in range(u + 1, n):
            val = _pair_value(mat, mode, indptr, head, cap, rev, pair_arc, u, v, 0, res, parent, queue)
            out[u, v] = val
            out[v, u] = val
    return out


def first_pair_above(mat, mode, us, vs, bound):
    """Index of the first listed pair whose local value exceeds bound, else -1."""
    indptr, head, cap, rev, pair_arc = build_network(mat, mode)
    nn = indptr.shape[0] - 1
    res = np.zeros(cap.shape[0], dtype=np.int64)
    parent = np.zeros(nn, dtype=np.int64)
    queue = np.zeros(nn, dtype=np.int64)
    for i in range(us.shape[0]):
        val = _pair_value(mat, mode, indptr, head, cap, rev, pair_arc, us[i], vs[i], bound + 1, res, parent, queue)
        if val > bound:
            return i
    return -1


def min_pair_value(mat, mode, stop_below):
    """Minimum local value over all pairs; returns early once below stop_below."""
    n = mat.shape[0]
    indptr, head, cap, rev, pair_arc = build_network(mat, mode)
    nn = indptr.shape[0] - 1
    res = np.zeros(cap.shape[0], dtype=np.int64)
    parent = np.zeros(nn, dtype=np.int64)
    queue = np.zeros(nn, dtype=np.int64)
    best = -1
    for u in range(n):
        for v in range(u + 1, n):
            lim = best if best >= 0 else 0
            val = _pair_value(mat, mode, indptr, head, cap, rev, pair_arc, u, v, lim, res, parent, queue)
            if best < 0 or val < best:
                best = val
            if best < stop_below:
                return best
    return best


_ORDER = ("build_network", "max_flow", "_pair_value", "local_value", "all_pairs",
          "first_pair_above", "min_pair_value")

python = SimpleNamespace(name="python", **{k: globals()[k] for k in _ORDER})


def _compile():
    import numba

    ns = dict(globals())
    for name in _ORDER:
        f = globals()[name]
        clone = types.FunctionType(f.__code__, ns, name, f.__defaults__, f.__closure__)
        clone.__module__ = __name__
        clone.__qualname__ = name
        ns[name] = numba.njit(cache=True, nogil=True)(clone)
    return SimpleNamespace(name="numba", **{k: ns[k] for k in _ORDER})


def _load_numba():
    try:
        return _compile()
    except ImportError:
        return None


compiled = None if numba_disabled() else _load_numba()
active = compiled if compiled is not None else python


def select(name: str | None = None) -> SimpleNamespace:
    """Kernel namespace by name ('numba' or 'python'); default is the active one."""
    global compiled
    if name is None:
        return active
    if name == "python":
        return python
    if name == "numba":
        if compiled is None:
            compiled = _load_numba()
        if compiled is None:
            raise RuntimeError("numba is not available")
        return compiled
    raise ValueError(f"unknown kernel backend {name!r}")
