"""Brute-force oracles, small-order enumeration and the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

from . import _kernels
from . import connectivity as conn
from .canon import canonical_form
from .enumeration import any_rows, doubled_rows, edge_bound, grow, simple_rows
from .extremal import exact_bound, general_bound, nearly_regular, potential
from .formats import read_graph6_stream
from .graph import GraphError, MultiGraph
from .minimality import (
    degree_class_forest_check,
    is_2_connected,
    is_minimally_2_connected,
    is_minimally_2_edge_connected,
    is_minimally_k_connected,
)

INTERNAL_MAX_N = 8
ORACLE_MAX_N = 10
ORACLE_EDGE_MAX_N = 12


# -- oracles -------------------------------------------------------------------


def _separated(g: MultiGraph, u: int, v: int, removed: set[int], skip_uv: bool) -> bool:
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for y in g.adjacency[x]:
            if y in removed or y in seen:
                continue
            if skip_uv and {x, y} == {u, v}:
                continue
            if y == v:
                return False
            seen.add(y)
            stack.append(y)
    return True


def oracle_vertex_connectivity(g: MultiGraph, u: int, v: int) -> int:
    """mult(uv) plus the smallest vertex set separating u from v once uv is gone."""
    if g.n > ORACLE_MAX_N:
        raise GraphError(f"vertex oracle limited to n <= {ORACLE_MAX_N}")
    if u == v:
        raise GraphError("oracle needs two distinct vertices")
    others = [w for w in range(g.n) if w not in (u, v)]
    for size in range(len(others) + 1):
        for s in combinations(others, size):
            if _separated(g, u, v, set(s), skip_uv=True):
                return g.mult(u, v) + size
    raise AssertionError("removing every other vertex always separates")


def oracle_edge_connectivity(g: MultiGraph, u: int, v: int) -> int:
    """Smallest number of edge copies whose removal separates u from v.

    A minimal separating set is the cut between some vertex set S containing
    u but not v and its complement, so it suffices to try every such S.
    """
    if g.n > ORACLE_EDGE_MAX_N:
        raise GraphError(f"edge oracle limited to n <= {ORACLE_EDGE_MAX_N}")
    if u == v:
        raise GraphError("oracle needs two distinct vertices")
    others = [w for w in range(g.n) if w not in (u, v)]
    best = None
    for bits in range(1 << len(others)):
        side = {u} | {w for i, w in enumerate(others) if bits >> i & 1}
        cut = sum(c for (a, b), c in g.pairs if (a in side) != (b in side))
        if best is None or cut < best:
            best = cut
    return best


def oracle_pair_matrix(g: MultiGraph, mode: str = "vertex") -> list[list[int]]:
    fn = oracle_vertex_connectivity if mode == "vertex" else oracle_edge_connectivity
    out = [[0] * g.n for _ in range(g.n)]
    for u, v in combinations(range(g.n), 2):
        out[u][v] = out[v][u] = fn(g, u, v)
    return out


def oracle_mismatches(g: MultiGraph, mode: str = "vertex") -> list[tuple[int, int, int, int]]:
    """(u, v, flow value, oracle value) for every pair where they differ."""
    flow = conn.pair_matrix(g, mode)
    ora = oracle_pair_matrix(g, mode)
    return [
        (u, v, int(flow[u, v]), ora[u][v])
        for u, v in combinations(range(g.n), 2)
        if flow[u, v] != ora[u][v]
    ]


# -- enumeration -----------------------------------------------------------------


@dataclass
class EnumerationJob:
    """What to enumerate.

    ``source`` is "internal" (n <= 8) or "graph6", in which case ``stream``
    supplies graph6 lines and graphs are filtered as they arrive.  ``k`` > 2
    switches the filter to minimal k-(edge-)connectivity.  ``dedup`` only
    matters for streams; the internal enumerator always yields one graph per
    isomorphism class.
    """

    n: int
    mode: str = "vertex"
    source: str = "internal"
    k: int = 2
    dedup: bool = True
    stream: Iterable[str] | None = field(default=None, repr=False)


def _check_mode(mode: str) -> None:
    if mode not in ("vertex", "edge"):
        raise ValueError(f"mode must be 'vertex' or 'edge', not {mode!r}")


_LEVELS: dict[tuple[str, int], dict[int, list]] = {}


def _superclass(n: int, mode: str, k: int) -> list:
    """Hereditary superclass members of order n (reuses deeper growth)."""
    levels = _LEVELS.get((mode, k))
    if levels is None or n not in levels:
        code = _kernels.VERTEX if mode == "vertex" else _kernels.EDGE
        if mode == "edge" and k == 2:

            def rows(m):
                yield from simple_rows(m)
                yield from doubled_rows(m)

        else:
            rows = simple_rows
        levels = grow(n, rows, edge_bound(code, k))
        _LEVELS[(mode, k)] = levels
    return levels[n]


def _filter(mode: str, k: int):
    if k == 2:
        return is_minimally_2_connected if mode == "vertex" else is_minimally_2_edge_connected
    return lambda g: is_minimally_k_connected(g, k, mode)


def minimal_class(n: int, mode: str = "vertex", k: int = 2) -> list[MultiGraph]:
    """Every minimally k-(edge-)connected graph of order n, up to isomorphism.

    Edge mode with k = 2 includes multigraphs (multiplicity at most 2); for
    k >= 3 only simple graphs are generated.
    """
    _check_mode(mode)
    if not 1 <= n <= INTERNAL_MAX_N:
        raise GraphError(f"internal enumeration covers 1 <= n <= {INTERNAL_MAX_N}")
    if k < 2:
        raise GraphError("k must be at least 2")
    keep = _filter(mode, k)
    graphs = (MultiGraph.from_matrix(m) for m in _superclass(n, mode, k))
    return [g for g in graphs if keep(g)]


def all_multigraphs(n: int, max_mult: int) -> list[MultiGraph]:
    """Every loopless multigraph on n vertices with multiplicities <= max_mult."""
    levels = grow(n, lambda m: any_rows(m, max_mult))
    return [MultiGraph.from_matrix(m) for m in levels[n]]


def enumerate_graphs(job: EnumerationJob) -> Iterator[MultiGraph]:
    _check_mode(job.mode)
    if job.source == "internal":
        yield from minimal_class(job.n, job.mode, job.k)
        return
    if job.source != "graph6":
        raise GraphError(f"unknown enumeration source {job.source!r}")
    if job.stream is None:
        raise GraphError("graph6 source needs a stream")
    keep = _filter(job.mode, job.k)
    seen = set()
    for g in read_graph6_stream(job.stream):
        if g.n != job.n or not keep(g):
            continue
        if job.dedup:
            key = canonical_form(g)
            if key in seen:
                continue
            seen.add(key)
        yield g


# -- optimal graphs ----------------------------------------------------------------


@dataclass
class OptimalCertificate:
    n: int
    mode: str
    best: Fraction
    witnesses: list[tuple]
    bound: Fraction
    class_size: int
    bipartite_by_degree: bool
    two_connected: bool
    simple: bool
    k: int = 2

    @property
    def gap(self) -> Fraction:
        return self.bound - self.best

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "k": self.k,
            "best": _q(self.best),
            "bound": _q(self.bound),
            "gap": _q(self.gap),
            "class_size": self.class_size,
            "witnesses": [list(w[1]) for w in self.witnesses],
            "bipartite_by_degree": self.bipartite_by_degree,
            "two_connected": self.two_connected,
            "simple": self.simple,
        }


def _q(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _winners(graphs: Iterable[MultiGraph], mode: str) -> tuple[Fraction | None, list[MultiGraph], int]:
    best = None
    wins: list[MultiGraph] = []
    count = 0
    for g in graphs:
        count += 1
        a = conn.average_connectivity(g, mode)
        if best is None or a > best:
            best, wins = a, [g]
        elif a == best:
            wins.append(g)
    return best, wins, count


def find_optimal(n: int, mode: str = "vertex", graphs: Iterable[MultiGraph] | None = None) -> OptimalCertificate:
    """Exhaustive argmax of the average over the minimal class of order n.

    The structure flags are conjunctions over all winners.  Witnesses are
    canonical forms, smallest first.
    """
    _check_mode(mode)
    if n < 3:
        raise GraphError("optimal graphs are searched for n >= 3")
    pool = minimal_class(n, mode) if graphs is None else graphs
    best, wins, count = _winners(pool, mode)
    if best is None:
        raise GraphError(f"no minimal graph of order {n} supplied")
    return OptimalCertificate(
        n=n,
        mode=mode,
        best=best,
        witnesses=sorted(canonical_form(g) for g in wins),
        bound=exact_bound(n),
        class_size=count,
        bipartite_by_degree=all(g.is_bipartite_by_degree_class(2) for g in wins),
        two_connected=all(is_2_connected(g) for g in wins),
        simple=all(g.is_simple() for g in wins),
    )


@dataclass
class ConjectureReport:
    k: int
    n: int
    mode: str
    class_size: int
    best: Fraction | None
    witnesses: list[tuple]
    bipartite_flags: list[bool]
    probe: Fraction

    @property
    def all_bipartite(self) -> bool:
        return bool(self.bipartite_flags) and all(self.bipartite_flags)

    @property
    def below_probe(self) -> bool | None:
        return None if self.best is None else self.best < self.probe

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "mode": self.mode,
            "class_size": self.class_size,
            "best": None if self.best is None else _q(self.best),
            "witnesses": [list(w[1]) for w in self.witnesses],
            "bipartite": self.bipartite_flags,
            "probe": _q(self.probe),
            "below_probe": self.below_probe,
        }


def check_conjecture(k: int, n: int, mode: str = "vertex", stream: Iterable[str] | None = None) -> ConjectureReport:
    """Optimal minimally k-(edge-)connected graphs of order n and their shape.

    Reports, per winner, whether the degree-k vertices and the higher-degree
    vertices both form independent sets, and compares the best average with
    9k/8 (reported only, nothing is asserted).
    """
    _check_mode(mode)
    if k < 3:
        raise GraphError("the conjecture check is for k >= 3")
    if stream is None:
        if n > INTERNAL_MAX_N:
            raise GraphError(f"n > {INTERNAL_MAX_N} needs a graph6 stream")
        pool = minimal_class(n, mode, k)
    else:
        pool = list(enumerate_graphs(EnumerationJob(n, mode, "graph6", k=k, stream=stream)))
    best, wins, count = _winners(pool, mode)
    order = sorted(wins, key=canonical_form)
    return ConjectureReport(
        k=k,
        n=n,
        mode=mode,
        class_size=count,
        best=best,
        witnesses=[canonical_form(g) for g in order],
        bipartite_flags=[g.is_bipartite_by_degree_class(k) for g in order],
        probe=Fraction(9 * k, 8),
    )


# -- suites ------------------------------------------------------------------------


def bound_soundness(n: int, mode: str = "vertex") -> list[dict]:
    """Members of the minimal class of order n that break the upper bounds."""
    out = []
    exact = exact_bound(n)
    for g in minimal_class(n, mode):
        a = conn.average_connectivity(g, mode)
        if a > exact or a >= Fraction(9, 4) or a > general_bound(n):
            out.append({"graph": canonical_form(g), "average": a})
    return out


def lower_bound_check(n: int, mode: str = "vertex") -> list[tuple]:
    """Graphs where the average drops below 2.

    In vertex mode equality must also pick out exactly the cycles; in edge
    mode every cactus of cycles and doubled edges has average 2, so only
    the inequality is checked.
    """
    bad = []
    for g in minimal_class(n, mode):
        a = conn.average_connectivity(g, mode)
        is_cycle = g.is_simple() and all(d == 2 for d in g.degrees)
        if a < 2 or (mode == "vertex" and (a == 2) != is_cycle):
            bad.append(canonical_form(g))
    return bad


def forest_check(n: int) -> list[tuple]:
    """Minimally 2-connected graphs whose branch vertices do not induce a forest."""
    return [canonical_form(g) for g in minimal_class(n, "vertex") if not degree_class_forest_check(g)]


def big_degree_pairs_check(n: int) -> list[tuple]:
    """Pairs of degree >= 3 vertices with kappa != 2 inside a common component.

    In a minimally 2-connected graph, two vertices of degree at least 3 in
    the same component of the subgraph they induce have kappa exactly 2.
    """
    bad = []
    for g in minimal_class(n, "vertex"):
        big = [v for v in range(g.n) if g.degree(v) >= 3]
        sub = g.induced(big)
        pm = conn.pair_matrix(g, "vertex")
        for comp in sub.components():
            verts = [big[i] for i in comp]
            for a, b in combinations(verts, 2):
                if pm[a, b] != 2:
                    bad.append((canonical_form(g), a, b))
    return bad


def balancing_check(n_max: int = 5, d_max: int = 14) -> list[tuple]:
    """Positive sequences whose potential beats the nearly regular one."""
    bad = []

    def compositions(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for first in range(1, total - parts + 2):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for n in range(1, n_max + 1):
        for D in range(n, d_max + 1):
            top = potential(nearly_regular(D, n).sequence)
            for seq in compositions(D, n):
                if potential(seq) > top:
                    bad.append(seq)
    return bad
