from __future__ import annotations

import networkx as nx
import numpy as np
from hypothesis import given, strategies as st

from avgconn import _kernels
from avgconn.canon import canonical_form, canonical_graph
from avgconn.enumeration import any_rows, doubled_rows, edge_bound, grow, simple_rows
from avgconn.graph import MultiGraph

from conftest import multigraphs


def _nx_multi(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    for (u, v), c in g.pairs:
        h.add_edge(u, v, m=c)
    return h


@given(multigraphs(max_n=7), st.randoms(use_true_random=False))
def test_canonical_form_is_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(g) == canonical_form(g.relabel(perm))
    assert canonical_graph(g) == canonical_graph(g.relabel(perm))


@given(multigraphs(min_n=4, max_n=6, max_mult=2), multigraphs(min_n=4, max_n=6, max_mult=2))
def test_canonical_form_separates(g, h):
    same = g.n == h.n and nx.is_isomorphic(
        _nx_multi(g), _nx_multi(h), edge_match=lambda a, b: a["m"] == b["m"]
    )
    assert (canonical_form(g) == canonical_form(h)) == same


def test_connected_simple_graph_counts():
    # one representative per isomorphism class of connected graphs
    levels = grow(7, simple_rows)
    assert [len(levels[n]) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]


def test_all_graph_counts():
    levels = grow(6, lambda m: simple_rows(m, connected=False))
    assert [len(levels[n]) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_multigraph_counts():
    levels = grow(4, lambda m: any_rows(m, 2))
    # loopless multigraphs with multiplicity <= 2
    assert [len(levels[n]) for n in range(1, 5)] == [1, 3, 10, 66]


def test_vertex_superclass_counts():
    levels = grow(8, simple_rows, edge_bound(_kernels.VERTEX, 2))
    assert [len(levels[n]) for n in range(1, 9)] == [1, 1, 2, 4, 10, 27, 82, 270]


def test_edge_superclass_counts():
    rows = lambda m: list(simple_rows(m)) + list(doubled_rows(m))
    levels = grow(7, rows, edge_bound(_kernels.EDGE, 2))
    assert [len(levels[n]) for n in range(1, 8)] == [1, 2, 4, 13, 42, 171, 723]


def test_three_superclass_counts():
    levels = grow(7, simple_rows, edge_bound(_kernels.VERTEX, 3))
    assert [len(levels[n]) for n in range(1, 8)] == [1, 1, 2, 6, 17, 71, 328]


def test_rows():
    assert list(doubled_rows(2)) == [(2, 0), (0, 2)]
    assert len(list(simple_rows(3))) == 7
    assert len(list(any_rows(2, 2))) == 9
    assert edge_bound(_kernels.EDGE, 2)(np.zeros((2, 2), dtype=np.int64))
    assert not edge_bound(_kernels.EDGE, 2)(np.asarray(MultiGraph(2, [(0, 1, 3)]).matrix))


def burnside_count(n: int, colours: int) -> int:
    """Edge colourings of K_n up to vertex permutation (Burnside)."""
    from itertools import combinations, permutations

    pairs = list(combinations(range(n), 2))
    total = count = 0
    for p in permutations(range(n)):
        img = {e: tuple(sorted((p[e[0]], p[e[1]]))) for e in pairs}
        seen: set = set()
        cycles = 0
        for e in pairs:
            if e in seen:
                continue
            cycles += 1
            while e not in seen:
                seen.add(e)
                e = img[e]
        total += colours ** cycles
        count += 1
    return total // count


def test_counts_match_burnside():
    for n, mult in [(3, 3), (4, 2), (4, 3), (5, 1), (6, 1)]:
        levels = grow(n, lambda m: any_rows(m, mult))
        assert len(levels[n]) == burnside_count(n, mult + 1)
