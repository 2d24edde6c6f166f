"""Local, total and average (edge-)connectivity via maximum flow.

kappa(u, v) follows the path-packing definition, so it is defined for
adjacent pairs too: every direct u-v edge copy is one path, and the rest
is a max-flow in the vertex-split network with those copies removed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from . import _kernels
from .graph import GraphError, MultiGraph

MODES = ("vertex", "edge")


def _mode(mode: str) -> int:
    if mode == "vertex":
        return _kernels.VERTEX
    if mode == "edge":
        return _kernels.EDGE
    raise ValueError(f"mode must be 'vertex' or 'edge', not {mode!r}")


def _mat(g: MultiGraph) -> np.ndarray:
    return np.ascontiguousarray(g.matrix)


def _check_pair(g: MultiGraph, u: int, v: int) -> None:
    if u == v:
        raise GraphError("local connectivity needs two distinct vertices")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"vertex out of range for n={g.n}")


def local_vertex_connectivity(g: MultiGraph, u: int, v: int) -> int:
    """Maximum number of internally disjoint u-v paths (0 across components)."""
    _check_pair(g, u, v)
    return int(_kernels.active.local_value(_mat(g), _kernels.VERTEX, u, v, 0))


def local_edge_connectivity(g: MultiGraph, u: int, v: int) -> int:
    """Maximum number of edge-disjoint u-v paths."""
    _check_pair(g, u, v)
    return int(_kernels.active.local_value(_mat(g), _kernels.EDGE, u, v, 0))


def local_connectivity(g: MultiGraph, u: int, v: int, mode: str = "vertex") -> int:
    _check_pair(g, u, v)
    return int(_kernels.active.local_value(_mat(g), _mode(mode), u, v, 0))


def pair_matrix(g: MultiGraph, mode: str = "vertex") -> np.ndarray:
    """Symmetric matrix of local values with a zero diagonal."""
    if g.n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    return _kernels.active.all_pairs(_mat(g), _mode(mode))


def total_connectivity(g: MultiGraph, mode: str = "vertex") -> int:
    """K(G) in vertex mode, Lambda(G) in edge mode."""
    a = pair_matrix(g, mode)
    return int(a[np.triu_indices(g.n, 1)].sum())


def average_connectivity(g: MultiGraph, mode: str = "vertex") -> Fraction:
    if g.n < 2:
        raise GraphError("average connectivity needs at least 2 vertices")
    return Fraction(total_connectivity(g, mode), comb(g.n, 2))


def global_connectivity(g: MultiGraph, mode: str = "vertex") -> int:
    """kappa(G) or lambda(G).

    Edge mode is the minimum over pairs.  Vertex mode is the minimum over
    pairs capped at n-1: deleting n-1 vertices always leaves the trivial
    graph, which only matters for multigraphs.
    """
    if g.n < 2:
        raise GraphError("global connectivity needs at least 2 vertices")
    best = int(_kernels.active.min_pair_value(_mat(g), _mode(mode), 0))
    if mode == "vertex":
        best = min(best, g.n - 1)
    return best


def adjacent_pairs_exceed(g: MultiGraph, bound: int, mode: str = "vertex") -> tuple[int, int] | None:
    """First adjacent pair whose local value exceeds bound, or None."""
    if not g.pairs:
        return None
    us = np.array([u for (u, _), _ in g.pairs], dtype=np.int64)
    vs = np.array([v for (_, v), _ in g.pairs], dtype=np.int64)
    i = int(_kernels.active.first_pair_above(_mat(g), _mode(mode), us, vs, bound))
    return None if i < 0 else (int(us[i]), int(vs[i]))


@dataclass(frozen=True)
class ConnectivityReport:
    mode: str
    n: int
    pairs: np.ndarray = field(repr=False, compare=False)
    total: int
    average: Fraction
    global_connectivity: int
    ideal: bool

    def value(self, u: int, v: int) -> int:
        return int(self.pairs[u, v])

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "n": self.n,
            "total": self.total,
            "average": f"{self.average.numerator}/{self.average.denominator}",
            "global": self.global_connectivity,
            "ideal": self.ideal,
            "pairs": self.pairs.tolist(),
        }


def _ideal_from(g: MultiGraph, a: np.ndarray) -> tuple[int, int] | None:
    deg = g.degrees
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if a[u, v] != min(deg[u], deg[v]):
                return (u, v)
    return None


def report(g: MultiGraph, mode: str = "vertex") -> ConnectivityReport:
    if g.n < 2:
        raise GraphError("a connectivity report needs at least 2 vertices")
    a = pair_matrix(g, mode)
    a.setflags(write=False)
    upper = a[np.triu_indices(g.n, 1)]
    total = int(upper.sum())
    glob = int(upper.min())
    if mode == "vertex":
        glob = min(glob, g.n - 1)
    return ConnectivityReport(
        mode=mode,
        n=g.n,
        pairs=a,
        total=total,
        average=Fraction(total, comb(g.n, 2)),
        global_connectivity=glob,
        ideal=_ideal_from(g, a) is None,
    )


def ideal_violation(g: MultiGraph, mode: str = "vertex") -> tuple[int, int] | None:
    """A pair whose local value falls short of the smaller degree, if any."""
    if g.n < 2:
        raise GraphError("ideal connectivity needs at least 2 vertices")
    return _ideal_from(g, pair_matrix(g, mode))


def is_ideally_connected(g: MultiGraph) -> bool:
    return ideal_violation(g, "vertex") is None


def is_ideally_edge_connected(g: MultiGraph) -> bool:
    return ideal_violation(g, "edge") is None


def path_packing(g: MultiGraph, u: int, v: int, mode: str = "vertex", limit: int = 0) -> list[list[int]]:
    """Explicit family of disjoint u-v paths of maximum size (or ``limit`` if > 0).

    Vertex mode returns internally disjoint paths, each direct edge copy
    counted as the path ``[u, v]``; edge mode returns edge-disjoint paths.
    Slow and simple: meant for witnesses, not for bulk computation.
    """
    _check_pair(g, u, v)
    _mode(mode)
    paths: list[list[int]] = []
    cap: dict = {}

    def arc(a, b, c):
        cap.setdefault(a, {})
        cap.setdefault(b, {})
        cap[a][b] = cap[a].get(b, 0) + c
        cap[b].setdefault(a, 0)

    if mode == "vertex":
        for _ in range(g.mult(u, v)):
            paths.append([u, v])
        for w in range(g.n):
            arc((w, 0), (w, 1), g.n if w in (u, v) else 1)
        for (a, b), c in g.pairs:
            if {a, b} == {u, v}:
                continue
            arc((a, 1), (b, 0), c)
            arc((b, 1), (a, 0), c)
        src, dst = (u, 1), (v, 0)
    else:
        for (a, b), c in g.pairs:
            arc(a, b, c)
            arc(b, a, c)
        src, dst = u, v
    orig = {a: dict(nb) for a, nb in cap.items()}
    want = limit - len(paths) if limit > 0 else -1
    got = 0
    while want < 0 or got < want:
        parent = {src: None}
        queue = [src]
        for a in queue:
            if a == dst:
                break
            for b, c in cap.get(a, {}).items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if dst not in parent:
            break
        b = dst
        while parent[b] is not None:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        got += 1
    # flow on arc a->b is how much its residual dropped, net of the reverse arc
    flow = {}
    for a, nb in orig.items():
        for b, c in nb.items():
            f = c - cap[a][b]
            if f > 0:
                flow[(a, b)] = f
    for (a, b) in list(flow):
        if (b, a) in flow:
            d = min(flow[(a, b)], flow[(b, a)])
            for key in ((a, b), (b, a)):
                flow[key] -= d
                if flow[key] == 0:
                    del flow[key]
    for _ in range(got):
        walk = [src]
        seen = {src}
        while walk[-1] != dst:
            a = walk[-1]
            b = next(b for (x, b), f in flow.items() if x == a and f > 0)
            flow[(a, b)] -= 1
            if b in seen:  # drop a circulation
                walk = walk[: walk.index(b) + 1]
            else:
                walk.append(b)
            seen = set(walk)
        if mode == "vertex":
            paths.append([u] + [x for x, side in walk[1:] if side == 0])
        else:
            paths.append(walk)
    return paths
