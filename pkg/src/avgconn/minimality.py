"""Blocks, bridges and the minimal 2-(edge-)connectivity predicates.

A simple graph is minimally 2-connected exactly when it is 2-connected and
no edge is a chord of a cycle.  An edge uv is such a chord iff u and v still
lie on a common cycle of G - uv, i.e. iff kappa(u, v) >= 3.  Likewise a
2-edge-connected multigraph is minimally 2-edge-connected iff every adjacent
pair has lambda(u, v) = 2.  Both reductions turn the checks into a handful
of bounded max-flows on the edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import connectivity as conn
from .graph import EdgeRef, GraphError, MultiGraph


@dataclass(frozen=True)
class BlockDecomposition:
    cut_vertices: frozenset[int]
    blocks: tuple[tuple[int, ...], ...]
    bridges: tuple[EdgeRef, ...]
    block_pairs: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False)

    def blocks_of(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]

    def block_of_pair(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        for i, ps in enumerate(self.block_pairs):
            if key in ps:
                return i
        raise GraphError(f"{key} is not an edge")


def _blocks(g: MultiGraph) -> tuple[list[list[tuple[int, int]]], set[int]]:
    """Biconnected components as lists of distinct pairs, plus cut vertices.

    Iterative Tarjan over distinct pairs; multiplicity does not change the
    vertex-block structure.  Works on disconnected graphs too.
    """
    n = g.n
    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    timer = 0
    stack: list[tuple[int, int]] = []
    comps: list[list[tuple[int, int]]] = []
    cuts: set[int] = set()
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        children = 0
        work = [(root, -1, iter(adj[root]))]
        while work:
            x, parent, it = work[-1]
            advanced = False
            for y in it:
                if y == parent:
                    continue
                if disc[y] < 0:
                    stack.append((min(x, y), max(x, y)))
                    disc[y] = low[y] = timer
                    timer += 1
                    work.append((y, x, iter(adj[y])))
                    advanced = True
                    break
                if disc[y] < disc[x]:
                    stack.append((min(x, y), max(x, y)))
                    low[x] = min(low[x], disc[y])
            if advanced:
                continue
            work.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[x])
            if parent == root:
                children += 1
            if low[x] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                key = (min(parent, x), max(parent, x))
                comp = []
                while True:
                    e = stack.pop()
                    comp.append(e)
                    if e == key:
                        break
                comps.append(sorted(comp))
        if children >= 2:
            cuts.add(root)
    return comps, cuts


def decompose(g: MultiGraph) -> BlockDecomposition:
    if g.n < 2:
        raise GraphError("block decomposition needs at least 2 vertices")
    if not g.is_connected():
        raise GraphError("block decomposition needs a connected graph")
    comps, cuts = _blocks(g)
    comps.sort(key=lambda ps: sorted({v for p in ps for v in p}))
    blocks = tuple(tuple(sorted({v for p in ps for v in p})) for ps in comps)
    bridges = tuple(EdgeRef(*ps[0]) for ps in comps if len(ps) == 1 and g.mult(*ps[0]) == 1)
    return BlockDecomposition(frozenset(cuts), blocks, bridges, tuple(tuple(ps) for ps in comps))


def bridges(g: MultiGraph) -> list[tuple[int, int]]:
    """Bridges of any graph (connected or not) as sorted pairs."""
    comps, _ = _blocks(g)
    return sorted(ps[0] for ps in comps if len(ps) == 1 and g.mult(*ps[0]) == 1)


def cut_vertices(g: MultiGraph) -> set[int]:
    return _blocks(g)[1]


def is_2_connected(g: MultiGraph) -> bool:
    """Connected, n >= 3 and no cut vertex (a doubled edge on 2 vertices is not)."""
    return g.n >= 3 and g.is_connected() and not cut_vertices(g)


def is_2_edge_connected(g: MultiGraph) -> bool:
    return g.n >= 2 and g.is_connected() and not bridges(g)


# -- vertex version -----------------------------------------------------------


def chord_witness(g: MultiGraph) -> tuple[tuple[int, int], list[int]] | None:
    """A chord together with a cycle it subdivides, or None if chord-free."""
    if not g.is_simple():
        raise GraphError("chords are defined here for simple graphs only")
    hit = conn.adjacent_pairs_exceed(g, 2, "vertex")
    if hit is None:
        return None
    u, v = hit
    p, q = conn.path_packing(g.remove_edge(u, v), u, v, "vertex", limit=2)
    return (u, v), p + q[-2:0:-1]


def has_chorded_cycle(g: MultiGraph) -> bool:
    if not g.is_simple():
        raise GraphError("chords are defined here for simple graphs only")
    return conn.adjacent_pairs_exceed(g, 2, "vertex") is not None


def min2conn_violation(g: MultiGraph) -> dict | None:
    """Why g fails to be minimally 2-connected, or None if it is."""
    if not g.is_simple():
        (u, v), c = next(pc for pc in g.pairs if pc[1] > 1)
        return {"reason": "parallel edges", "pair": [u, v], "multiplicity": c}
    if g.n < 3:
        return {"reason": "fewer than 3 vertices"}
    if not g.is_connected():
        return {"reason": "disconnected"}
    cuts = cut_vertices(g)
    if cuts:
        return {"reason": "cut vertex", "vertex": min(cuts)}
    w = chord_witness(g)
    if w is not None:
        return {"reason": "chord", "chord": list(w[0]), "cycle": w[1]}
    return None


def is_minimally_2_connected(g: MultiGraph) -> bool:
    return min2conn_violation(g) is None


# -- edge version -------------------------------------------------------------


def min2edge_violation(g: MultiGraph) -> dict | None:
    if g.n < 2:
        return {"reason": "fewer than 2 vertices"}
    if not g.is_connected():
        return {"reason": "disconnected"}
    br = bridges(g)
    if br:
        return {"reason": "bridge", "pair": list(br[0])}
    for (u, v), c in g.pairs:
        if c >= 3:
            return {"reason": "triple edge", "pair": [u, v], "multiplicity": c}
    hit = conn.adjacent_pairs_exceed(g, 2, "edge")
    if hit is not None:
        u, v = hit
        return {
            "reason": "non-essential edge",
            "pair": [u, v],
            "lambda": conn.local_edge_connectivity(g, u, v),
        }
    return None


def is_minimally_2_edge_connected(g: MultiGraph) -> bool:
    return min2edge_violation(g) is None


def is_necklace(g: MultiGraph) -> bool:
    return g.is_simple() and is_2_connected(g) and is_minimally_2_edge_connected(g)


# -- general k, by definition -------------------------------------------------


def is_minimally_k_connected(g: MultiGraph, k: int, mode: str = "vertex") -> bool:
    """kappa(G) = k (or lambda) and deleting any one edge copy drops it below k."""
    if k < 1:
        raise GraphError("k must be at least 1")
    if g.n < 2 or conn.global_connectivity(g, mode) != k:
        return False
    for (u, v), _ in g.pairs:
        if conn.global_connectivity(g.remove_edge(u, v), mode) >= k:
            return False
    return True


def degree_class_forest_check(g: MultiGraph) -> bool:
    """Whether the vertices of degree > 2 induce a forest."""
    if not is_minimally_2_connected(g):
        raise GraphError("expected a minimally 2-connected graph")
    big = [v for v in range(g.n) if g.degree(v) > 2]
    f = g.induced(big)
    return f.size == f.n - len(f.components())
