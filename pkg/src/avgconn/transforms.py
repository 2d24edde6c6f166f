"""Order-preserving rewrites that raise total (edge-)connectivity.

Vertex mode (minimally 2-connected graphs):

* ``t_fan``: a chain u, u1, ..., v of k >= 3 edges through degree-2 vertices
  is replaced by the fan u-ui-v; K rises by exactly k - 2.
* ``t_contract_split``: adjacent branch vertices u, v are merged and a new
  degree-2 vertex is hung between the merged vertex and the cut vertex x of
  G - uv.

Edge mode (minimally 2-edge-connected multigraphs):

* ``e_extend_contract``: merge two adjacent degree-2 vertices, spend the
  freed vertex on an extension across a pair with lambda >= 3.
* ``e_block_collapse``: a block with all lambda = 2 is contracted to one
  vertex, its p - 1 spare vertices become extensions across a lambda >= 3 pair.
* ``e_bridge_swap``: adjacent branch vertices are merged and the bridge of
  G - uv that separates them is subdivided.
* ``e_cut_rewire``: at a cut vertex x with neighbours u, v of degree 2 on
  different sides, the edges ux, vx are swapped for uz, vy.

Every rewrite re-checks its output (minimality and a strict gain) and raises
:class:`TransformError` instead of returning an unverified graph.  The
driver only promises a strictly increasing sequence; it does not promise an
optimal graph, and it can stop early when no rewrite applies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

import numpy as np

from . import connectivity as conn
from .graph import EdgeRef, GraphError, MultiGraph, contract_set, extend, subdivide_edge
from .minimality import (
    _blocks,
    is_2_connected,
    is_minimally_2_connected,
    is_minimally_2_edge_connected,
)


class TransformError(GraphError):
    """A rewrite was applied outside its hypotheses, or failed its own check."""


@dataclass
class TransformTrace:
    name: str
    site: dict
    before: MultiGraph = field(repr=False)
    after: MultiGraph = field(repr=False)
    total_before: int
    total_after: int
    minimal_before: bool
    minimal_after: bool

    @property
    def gain(self) -> int:
        return self.total_after - self.total_before

    def to_dict(self) -> dict:
        return {
            "transform": self.name,
            "site": self.site,
            "n": self.after.n,
            "total_before": self.total_before,
            "total_after": self.total_after,
            "minimal_before": self.minimal_before,
            "minimal_after": self.minimal_after,
        }


def _minimal(g: MultiGraph, mode: str) -> bool:
    return is_minimally_2_connected(g) if mode == "vertex" else is_minimally_2_edge_connected(g)


def _require(cond: bool, clause: str) -> None:
    if not cond:
        raise TransformError(clause)


def _finish(name: str, site: dict, g: MultiGraph, h: MultiGraph, mode: str, exact_gain: int | None = None) -> TransformTrace:
    before = conn.total_connectivity(g, mode)
    after = conn.total_connectivity(h, mode)
    ok = _minimal(h, mode)
    if h.n != g.n:
        raise TransformError(f"{name}: order changed from {g.n} to {h.n}")
    if not ok:
        raise TransformError(f"{name}: output is not minimal")
    if after <= before:
        raise TransformError(f"{name}: total did not increase ({before} -> {after})")
    if exact_gain is not None and after - before != exact_gain:
        raise TransformError(f"{name}: gain {after - before}, expected {exact_gain}")
    return TransformTrace(name, site, g, h, before, after, True, ok)


def _shift(v: int, gone: int) -> int:
    """Label of v after vertex ``gone`` is merged away by contract_set."""
    return v - 1 if v > gone else v


# -- vertex mode ---------------------------------------------------------------


def fan_sites(g: MultiGraph) -> list[list[int]]:
    """Maximal degree-2 chains with >= 3 edges between branch vertices."""
    deg = g.degrees
    seen = set()
    out = []
    for u in range(g.n):
        if deg[u] <= 2:
            continue
        for w in g.adjacency[u]:
            if deg[w] != 2 or w in seen:
                continue
            path = [u, w]
            while deg[path[-1]] == 2:
                a, b = g.adjacency[path[-1]]
                nxt = b if a == path[-2] else a
                path.append(nxt)
                if nxt == u and deg[nxt] == 2:
                    break
            seen.update(path[1:-1])
            if len(path) - 1 >= 3 and path[-1] != u:
                out.append(path if path[0] < path[-1] else path[::-1])
    return sorted(out)


def _check_fan(g: MultiGraph, path: list[int]) -> None:
    _require(is_minimally_2_connected(g), "input is not minimally 2-connected")
    _require(len(path) >= 4, "chain needs at least 3 edges")
    _require(len(set(path)) == len(path), "chain repeats a vertex")
    for a, b in zip(path, path[1:]):
        _require(g.has_edge(a, b), f"{a}-{b} is not an edge")
    _require(g.degree(path[0]) > 2 and g.degree(path[-1]) > 2, "chain ends must have degree > 2")
    _require(all(g.degree(w) == 2 for w in path[1:-1]), "chain interior must have degree 2")


def t_fan(g: MultiGraph, path: list[int]) -> TransformTrace:
    _check_fan(g, path)
    u, v = path[0], path[-1]
    h = g
    for a, b in zip(path, path[1:]):
        h = h.remove_edge(a, b)
    for w in path[1:-1]:
        h = h.add_edge(u, w).add_edge(w, v)
    k = len(path) - 1
    return _finish("t_fan", {"path": list(path)}, g, h, "vertex", exact_gain=k - 2)


def contract_split_sites(g: MultiGraph) -> list[tuple[int, int]]:
    deg = g.degrees
    return [(u, v) for (u, v), _ in g.pairs if deg[u] >= 3 and deg[v] >= 3]


def t_contract_split(g: MultiGraph, u: int, v: int) -> TransformTrace:
    _require(is_minimally_2_connected(g), "input is not minimally 2-connected")
    _require(g.has_edge(u, v), f"{u}-{v} is not an edge")
    _require(g.degree(u) >= 3 and g.degree(v) >= 3, "both ends need degree >= 3")
    cuts = _blocks(g.remove_edge(u, v))[1]
    _require(bool(cuts), "G - uv has no cut vertex")
    x = min(cuts)
    hi = max(u, v)
    h = contract_set(g, (u, v))
    h = extend(h, _shift(x, hi), min(u, v))
    site = {"u": min(u, v), "v": hi, "x": x}
    return _finish("t_contract_split", site, g, h, "vertex")


# -- edge mode -----------------------------------------------------------------


def _pairs_matrix(g: MultiGraph) -> np.ndarray:
    return conn.pair_matrix(g, "edge")


def anchor_pairs(g: MultiGraph, lam: np.ndarray | None = None) -> list[tuple[int, int, tuple[int, ...]]]:
    """Pairs x < y in a common block with lambda(x, y) >= 3, with that block."""
    lam = _pairs_matrix(g) if lam is None else lam
    comps, _ = _blocks(g)
    out = []
    for ps in comps:
        verts = tuple(sorted({w for p in ps for w in p}))
        for x, y in combinations(verts, 2):
            if lam[x, y] >= 3:
                out.append((x, y, verts))
    return sorted(out)


def _check_edge_input(g: MultiGraph) -> None:
    _require(is_minimally_2_edge_connected(g), "input is not minimally 2-edge-connected")
    _require(g.n >= 5, "need order at least 5")


def extend_contract_sites(g: MultiGraph) -> list[tuple[int, int]]:
    deg = g.degrees
    return [(u, v) for (u, v), c in g.pairs if c == 1 and deg[u] == 2 and deg[v] == 2]


def e_extend_contract(g: MultiGraph, u: int, v: int) -> TransformTrace:
    _check_edge_input(g)
    _require(g.mult(u, v) == 1, f"{u}-{v} must be a single edge")
    _require(g.degree(u) == 2 and g.degree(v) == 2, "u and v need degree 2")
    anchors = anchor_pairs(g)
    _require(bool(anchors), "no pair with lambda >= 3 inside a block")
    x, y, _ = anchors[0]
    g1 = extend(g, x, y)
    h = contract_set(g1, (u, v))
    site = {"u": min(u, v), "v": max(u, v), "x": x, "y": y}
    return _finish("e_extend_contract", site, g, h, "edge")


def block_collapse_sites(g: MultiGraph) -> list[tuple[int, ...]]:
    """Blocks in which every pair has lambda = 2 (cycles and doubled edges)."""
    lam = _pairs_matrix(g)
    comps, _ = _blocks(g)
    out = []
    for ps in comps:
        verts = tuple(sorted({w for p in ps for w in p}))
        if all(lam[a, b] == 2 for a, b in combinations(verts, 2)):
            out.append(verts)
    return sorted(out)


def e_block_collapse(g: MultiGraph, block) -> TransformTrace:
    _check_edge_input(g)
    b = tuple(sorted(block))
    lam = _pairs_matrix(g)
    comps, _ = _blocks(g)
    blocks = {tuple(sorted({w for p in ps for w in p})) for ps in comps}
    _require(b in blocks, f"{list(b)} is not a block")
    _require(all(lam[p, q] == 2 for p, q in combinations(b, 2)), "block has a pair with lambda != 2")
    anchors = [(x, y) for x, y, _ in anchor_pairs(g, lam) if not (x in b and y in b)]
    _require(bool(anchors), "no pair with lambda >= 3 inside another block")
    x, y = anchors[0]
    if y in b:
        x, y = y, x
    h = g
    for _ in range(len(b) - 1):
        h = extend(h, x, y)
    h = contract_set(h, b)
    site = {"block": list(b), "x": x, "y": y}
    return _finish("e_block_collapse", site, g, h, "edge")


def _block_degree(g: MultiGraph, verts: set[int], v: int) -> int:
    return sum(g.mult(v, w) for w in g.adjacency[v] if w in verts)


def bridge_swap_sites(g: MultiGraph) -> list[tuple[int, int]]:
    deg = g.degrees
    comps, _ = _blocks(g)
    out = []
    for ps in comps:
        verts = {w for p in ps for w in p}
        for u, v in ps:
            if g.mult(u, v) != 1 or deg[u] < 3 or deg[v] < 3:
                continue
            if _block_degree(g, verts, u) >= 3 and _block_degree(g, verts, v) >= 3:
                out.append((u, v))
    return sorted(out)


def _separating_bridge(g: MultiGraph, u: int, v: int) -> tuple[int, int]:
    h = g.remove_edge(u, v)
    comps, _ = _blocks(h)
    for a, b in sorted(ps[0] for ps in comps if len(ps) == 1 and h.mult(*ps[0]) == 1):
        side = h.remove_edge(a, b).components()
        where = {w: i for i, c in enumerate(side) for w in c}
        if where[u] != where[v]:
            return (a, b) if where[a] == where[u] else (b, a)
    raise TransformError("G - uv has no bridge separating u and v")


def e_bridge_swap(g: MultiGraph, u: int, v: int) -> TransformTrace:
    _check_edge_input(g)
    _require(g.mult(u, v) == 1, f"{u}-{v} must be a single edge")
    _require(g.degree(u) >= 3 and g.degree(v) >= 3, "both ends need degree >= 3")
    comps, _ = _blocks(g)
    key = (min(u, v), max(u, v))
    verts = next({w for p in ps for w in p} for ps in comps if key in ps)
    _require(
        _block_degree(g, verts, u) >= 3 and _block_degree(g, verts, v) >= 3,
        "both ends need degree >= 3 inside the block of uv",
    )
    x, y = _separating_bridge(g, u, v)
    hi = max(u, v)
    lo = min(u, v)
    h = contract_set(g, (u, v))
    xs = lo if x in (u, v) else _shift(x, hi)
    ys = lo if y in (u, v) else _shift(y, hi)
    h = subdivide_edge(h, EdgeRef(xs, ys))
    site = {"u": lo, "v": hi, "x": x, "y": y}
    return _finish("e_bridge_swap", site, g, h, "edge")


def _rewire_choice(g: MultiGraph, x: int):
    """(u, y, v, z) for a cut vertex x, or a reason string."""
    deg = g.degrees
    if not g.is_connected():
        return "graph is disconnected"
    comps = g.components(removed=[x])
    if len(comps) < 2:
        return f"{x} is not a cut vertex"
    blocks, _ = _blocks(g)
    for ps in blocks:
        verts = {w for p in ps for w in p}
        if x in verts and _block_degree(g, verts, x) < 3:
            return f"{x} has degree < 3 in block {sorted(verts)}"
    if any(deg[a] >= 3 and deg[b] >= 3 for (a, b), _ in g.pairs):
        return "two vertices of degree >= 3 are adjacent"
    side1 = set(comps[0])

    def pick(side):
        for w in g.adjacency[x]:
            if w in side and deg[w] == 2 and g.mult(w, x) == 1:
                other = next(t for t in g.adjacency[w] if t != x)
                return w, other
        return None

    a = pick(side1)
    b = pick(set(range(g.n)) - side1 - {x})
    if a is None or b is None:
        return "x needs a degree-2 neighbour on each side"
    return a[0], a[1], b[0], b[1]


def cut_rewire_sites(g: MultiGraph) -> list[int]:
    if g.n < 3 or not g.is_connected():
        return []
    return sorted(x for x in _blocks(g)[1] if not isinstance(_rewire_choice(g, x), str))


def e_cut_rewire(g: MultiGraph, x: int) -> TransformTrace:
    _check_edge_input(g)
    choice = _rewire_choice(g, x)
    _require(not isinstance(choice, str), choice if isinstance(choice, str) else "")
    u, y, v, z = choice
    h = g.remove_edge(u, x).remove_edge(v, x).add_edge(u, z).add_edge(v, y)
    site = {"x": x, "u": u, "y": y, "v": v, "z": z}
    return _finish("e_cut_rewire", site, g, h, "edge")


# -- driver ----------------------------------------------------------------------

Finder = Callable[[MultiGraph], list]
Applier = Callable[..., TransformTrace]

VERTEX_ORDER: list[tuple[str, Finder, Applier]] = [
    ("t_fan", fan_sites, lambda g, s: t_fan(g, s)),
    ("t_contract_split", contract_split_sites, lambda g, s: t_contract_split(g, *s)),
]
EDGE_ORDER: list[tuple[str, Finder, Applier]] = [
    ("e_extend_contract", lambda g: extend_contract_sites(g) if anchor_pairs(g) else [],
     lambda g, s: e_extend_contract(g, *s)),
    ("e_block_collapse",
     lambda g: [b for b in block_collapse_sites(g)
                if any(not (x in b and y in b) for x, y, _ in anchor_pairs(g))],
     lambda g, s: e_block_collapse(g, s)),
    ("e_bridge_swap", bridge_swap_sites, lambda g, s: e_bridge_swap(g, *s)),
    ("e_cut_rewire", cut_rewire_sites, lambda g, s: e_cut_rewire(g, s)),
]


def order_for(mode: str) -> list[tuple[str, Finder, Applier]]:
    if mode == "vertex":
        return VERTEX_ORDER
    if mode == "edge":
        return EDGE_ORDER
    raise ValueError(f"mode must be 'vertex' or 'edge', not {mode!r}")


def applicable(g: MultiGraph, mode: str) -> list[tuple[str, object]]:
    """Every (transform name, site) whose hypotheses hold, in priority order."""
    return [(name, s) for name, find, _ in order_for(mode) for s in find(g)]


def apply(g: MultiGraph, name: str, site, mode: str) -> TransformTrace:
    for nm, _, app in order_for(mode):
        if nm == name:
            return app(g, site)
    raise ValueError(f"unknown transform {name!r} for mode {mode}")


def has_fixed_point_structure(g: MultiGraph, mode: str) -> bool:
    ok = g.is_bipartite_by_degree_class(2)
    if mode == "edge":
        ok = ok and is_2_connected(g)
    return ok


@dataclass
class ImproveResult:
    graph: MultiGraph
    traces: list[TransformTrace]
    fixed_point: bool
    exhausted: bool = False

    @property
    def stuck(self) -> bool:
        """Stopped with no applicable rewrite but without the target structure."""
        return not self.fixed_point and not self.exhausted


def improve_until_fixed(g: MultiGraph, mode: str = "vertex", limit: int | None = None) -> ImproveResult:
    """Apply the first applicable rewrite (priority order, smallest site) repeatedly.

    Each step strictly raises K or Lambda, which is bounded, so the loop ends.
    ``limit`` caps the number of steps.
    """
    if g.n < 5:
        raise GraphError("the improvement driver needs order at least 5")
    if not _minimal(g, mode):
        kind = "minimally 2-connected" if mode == "vertex" else "minimally 2-edge-connected"
        raise GraphError(f"input is not {kind}")
    traces: list[TransformTrace] = []
    cur = g
    while True:
        if limit is not None and len(traces) >= limit:
            return ImproveResult(cur, traces, has_fixed_point_structure(cur, mode), exhausted=True)
        step = None
        for _, find, app in order_for(mode):
            sites = find(cur)
            if sites:
                step = app(cur, sites[0])
                break
        if step is None:
            return ImproveResult(cur, traces, has_fixed_point_structure(cur, mode))
        traces.append(step)
        cur = step.after
