"""Undirected loopless multigraphs on the vertex set 0..n-1.

Graphs are immutable values.  Every rewrite (subdivision, contraction,
extension, gluing) returns a fresh graph with deterministic labels so that
transform traces are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised for malformed graphs or rewrites applied to missing edges."""


@dataclass(frozen=True, order=True)
class EdgeRef:
    """One copy of a (possibly parallel) edge.  Endpoints are stored sorted."""

    u: int
    v: int
    copy: int = 0

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise GraphError(f"loop at vertex {self.u} is not an edge")
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)
        if self.copy < 0:
            raise GraphError("copy index must be non-negative")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v)


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class MultiGraph:
    """Undirected multigraph with edge multiplicities and no loops.

    Parameters
    ----------
    n : int
        Number of vertices; vertices are ``0..n-1``.
    edges : iterable
        Items ``(u, v)`` (one copy) or ``(u, v, mult)``.  Repeated pairs
        accumulate.
    """

    __slots__ = ("_n", "_pairs", "_mult", "_cache")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()) -> None:
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        mult: dict[tuple[int, int], int] = {}
        for e in edges:
            if len(e) == 2:
                u, v = e
                c = 1
            elif len(e) == 3:
                u, v, c = e
            else:
                raise GraphError(f"bad edge specification {e!r}")
            u, v, c = int(u), int(v), int(c)
            if u == v:
                raise GraphError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if c < 0:
                raise GraphError("multiplicity must be positive")
            if c == 0:
                continue
            key = _norm(u, v)
            mult[key] = mult.get(key, 0) + c
        self._n = int(n)
        self._mult = dict(sorted(mult.items()))
        self._pairs = tuple(self._mult.items())
        self._cache: dict = {}

    @classmethod
    def from_multiplicities(cls, n: int, mult: Mapping[tuple[int, int], int]) -> "MultiGraph":
        return cls(n, ((u, v, c) for (u, v), c in mult.items()))

    @classmethod
    def from_matrix(cls, mat) -> "MultiGraph":
        a = np.asarray(mat)
        n = a.shape[0]
        return cls(n, ((u, v, int(a[u, v])) for u, v in combinations(range(n), 2) if a[u, v]))

    # -- basic queries ---------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def size(self) -> int:
        """Number of edges counted with multiplicity."""
        if "size" not in self._cache:
            self._cache["size"] = sum(self._mult.values())
        return self._cache["size"]

    m = size

    @property
    def pairs(self) -> tuple[tuple[tuple[int, int], int], ...]:
        """Sorted ``((u, v), multiplicity)`` items with ``u < v``."""
        return self._pairs

    def mult(self, u: int, v: int) -> int:
        if u == v:
            return 0
        return self._mult.get(_norm(u, v), 0)

    def has_edge(self, u: int, v: int) -> bool:
        return self.mult(u, v) > 0

    @property
    def degrees(self) -> tuple[int, ...]:
        if "deg" not in self._cache:
            deg = [0] * self._n
            for (u, v), c in self._pairs:
                deg[u] += c
                deg[v] += c
            self._cache["deg"] = tuple(deg)
        return self._cache["deg"]

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def neighbors(self, v: int) -> list[int]:
        return [w for w in self.adjacency[v]]

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted distinct neighbours of each vertex."""
        if "adj" not in self._cache:
            adj: list[list[int]] = [[] for _ in range(self._n)]
            for (u, v), _ in self._pairs:
                adj[u].append(v)
                adj[v].append(u)
            self._cache["adj"] = tuple(tuple(sorted(a)) for a in adj)
        return self._cache["adj"]

    @property
    def matrix(self) -> np.ndarray:
        """Dense multiplicity matrix (int64, read-only)."""
        if "mat" not in self._cache:
            a = np.zeros((self._n, self._n), dtype=np.int64)
            for (u, v), c in self._pairs:
                a[u, v] = c
                a[v, u] = c
            a.setflags(write=False)
            self._cache["mat"] = a
        return self._cache["mat"]

    def is_simple(self) -> bool:
        return all(c == 1 for _, c in self._pairs)

    def edges(self) -> Iterator[EdgeRef]:
        """Every edge copy, in pair order."""
        for (u, v), c in self._pairs:
            for i in range(c):
                yield EdgeRef(u, v, i)

    def degree_sequence(self) -> "DegreeSequence":
        return DegreeSequence(self.degrees)

    # -- structure -------------------------------------------------------

    def components(self, removed: Iterable[int] = ()) -> list[list[int]]:
        gone = set(removed)
        seen = [False] * self._n
        for v in gone:
            seen[v] = True
        out = []
        adj = self.adjacency
        for s in range(self._n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            q = deque([s])
            while q:
                x = q.popleft()
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        q.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self._n <= 1 or len(self.components()) == 1

    def is_bipartite_by_degree_class(self, k: int = 2) -> bool:
        """True iff vertices of degree k and of degree > k are both independent."""
        deg = self.degrees
        for (u, v), _ in self._pairs:
            if (deg[u] == k) == (deg[v] == k):
                return False
        return True

    # -- plain edits -----------------------------------------------------

    def add_edge(self, u: int, v: int, count: int = 1) -> "MultiGraph":
        mult = dict(self._mult)
        key = _norm(u, v)
        if u == v:
            raise GraphError("loops are not allowed")
        mult[key] = mult.get(key, 0) + count
        return MultiGraph.from_multiplicities(self._n, mult)

    def remove_edge(self, u: int, v: int, count: int = 1) -> "MultiGraph":
        key = _norm(u, v)
        have = self._mult.get(key, 0)
        if have < count:
            raise GraphError(f"edge {key} has multiplicity {have}, cannot remove {count}")
        mult = dict(self._mult)
        if have == count:
            del mult[key]
        else:
            mult[key] = have - count
        return MultiGraph.from_multiplicities(self._n, mult)

    def remove_pair(self, u: int, v: int) -> "MultiGraph":
        """Delete every copy of the pair uv."""
        return self.remove_edge(u, v, self.mult(u, v))

    def induced(self, vertices: Iterable[int]) -> "MultiGraph":
        """Induced subgraph, relabelled in increasing vertex order."""
        keep = sorted(set(vertices))
        idx = {v: i for i, v in enumerate(keep)}
        return MultiGraph(
            len(keep),
            ((idx[u], idx[v], c) for (u, v), c in self._pairs if u in idx and v in idx),
        )

    def relabel(self, perm: Sequence[int]) -> "MultiGraph":
        """Rename vertex ``v`` to ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise GraphError("relabelling must be a permutation")
        return MultiGraph(self._n, ((perm[u], perm[v], c) for (u, v), c in self._pairs))

    def add_vertex(self) -> "MultiGraph":
        return MultiGraph(self._n + 1, ((u, v, c) for (u, v), c in self._pairs))

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._n == other._n and self._pairs == other._pairs

    def __hash__(self) -> int:
        return hash((self._n, self._pairs))

    def __repr__(self) -> str:
        body = ", ".join(f"{u}-{v}" + (f"x{c}" if c > 1 else "") for (u, v), c in self._pairs)
        return f"MultiGraph(n={self._n}, [{body}])"


@dataclass(frozen=True)
class DegreeSequence:
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(int(x) for x in self.values)
        if any(x < 1 for x in vals):
            raise GraphError("degree sequence terms must be positive")
        object.__setattr__(self, "values", vals)

    @property
    def total(self) -> int:
        return sum(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


# -- named families ----------------------------------------------------------


def cycle(n: int) -> MultiGraph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return MultiGraph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> MultiGraph:
    if n < 1:
        raise GraphError("a path needs at least 1 vertex")
    return MultiGraph(n, ((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> MultiGraph:
    return MultiGraph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> MultiGraph:
    """K_{a,b} with parts ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise GraphError("both parts of K_{a,b} must be non-empty")
    return MultiGraph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def cycle_power(n: int, p: int) -> MultiGraph:
    """Circulant joining every pair at cycle distance at most p."""
    if p < 1:
        raise GraphError("power must be at least 1")
    if n < 2 * p + 2:
        raise GraphError(f"C_{n}^({p}) is not simple and {2 * p}-regular; need n >= {2 * p + 2}")
    return MultiGraph(n, ((i, (i + j) % n) for i in range(n) for j in range(1, p + 1)))


def cycle_bundle(n: int, t: int) -> MultiGraph:
    """Cycle C_n with every edge replaced by t parallel copies.

    For n == 2 the two cycle edges share a pair, which then carries 2t copies;
    the result is 2t-regular for every n >= 2.
    """
    if t < 1:
        raise GraphError("bundle size must be at least 1")
    if n < 2:
        raise GraphError("a bundled cycle needs at least 2 vertices")
    return MultiGraph(n, ((i, (i + 1) % n, t) for i in range(n)))


def disjoint_union(g: MultiGraph, h: MultiGraph) -> MultiGraph:
    off = g.n
    return MultiGraph(
        g.n + h.n,
        [(u, v, c) for (u, v), c in g.pairs] + [(u + off, v + off, c) for (u, v), c in h.pairs],
    )


def glue(g: MultiGraph, u: int, h: MultiGraph, v: int) -> MultiGraph:
    """Identify vertex u of g with vertex v of h.  h's vertices follow g's."""
    if not (0 <= u < g.n and 0 <= v < h.n):
        raise GraphError("gluing vertex out of range")
    return contract_set(disjoint_union(g, h), {u, g.n + v})


# -- rewrites ----------------------------------------------------------------


def _check_edge(g: MultiGraph, e: EdgeRef) -> None:
    if not (0 <= e.u < g.n and 0 <= e.v < g.n) or e.copy >= g.mult(e.u, e.v):
        raise GraphError(f"edge {e.u}-{e.v} (copy {e.copy}) is not in the graph")


def subdivide_all(g: MultiGraph) -> MultiGraph:
    """Replace every edge copy by a path of length two.

    New vertices are numbered from ``g.n`` in the order of ``g.edges()``.
    """
    edges = []
    z = g.n
    for e in g.edges():
        edges.append((e.u, z))
        edges.append((z, e.v))
        z += 1
    return MultiGraph(z, edges)


def subdivide_edge(g: MultiGraph, e: EdgeRef) -> MultiGraph:
    """Replace one copy of e by a path through the new vertex ``g.n``."""
    _check_edge(g, e)
    h = g.remove_edge(e.u, e.v).add_vertex()
    return h.add_edge(e.u, g.n).add_edge(g.n, e.v)


def contract_set(g: MultiGraph, vertices: Iterable[int]) -> MultiGraph:
    """Merge a vertex set into its smallest member and compact labels.

    Edges inside the set would become loops and are dropped; other parallel
    edges created by the merge are kept as multiplicities.
    """
    s = sorted(set(vertices))
    if not s:
        raise GraphError("cannot contract an empty vertex set")
    if s[0] < 0 or s[-1] >= g.n:
        raise GraphError("contracted vertex out of range")
    root = s[0]
    gone = set(s[1:])
    keep = [v for v in range(g.n) if v not in gone]
    idx = {v: i for i, v in enumerate(keep)}
    for v in gone:
        idx[v] = idx[root]
    edges = []
    for (u, v), c in g.pairs:
        a, b = idx[u], idx[v]
        if a != b:
            edges.append((a, b, c))
    return MultiGraph(len(keep), edges)


def contract_edge(g: MultiGraph, e: EdgeRef) -> MultiGraph:
    """Contract e; remaining copies of e's pair become loops and are deleted."""
    _check_edge(g, e)
    return contract_set(g, (e.u, e.v))


def extend(g: MultiGraph, x: int, y: int) -> MultiGraph:
    """Add a new vertex ``g.n`` adjacent to x and y."""
    if x == y:
        raise GraphError("extension needs two distinct vertices")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise GraphError("extension vertex out of range")
    return g.add_vertex().add_edge(x, g.n).add_edge(y, g.n)
