from __future__ import annotations

import pytest
from hypothesis import given

from avgconn.graph import (
    DegreeSequence,
    EdgeRef,
    GraphError,
    MultiGraph,
    complete,
    complete_bipartite,
    contract_edge,
    contract_set,
    cycle,
    cycle_bundle,
    cycle_power,
    disjoint_union,
    extend,
    glue,
    path,
    subdivide_all,
    subdivide_edge,
)

from conftest import multigraphs


def test_basic_accessors():
    g = MultiGraph(4, [(0, 1), (1, 0), (1, 2, 3)])
    assert g.n == 4
    assert g.size == 5
    assert g.mult(0, 1) == 2 and g.mult(1, 2) == 3 and g.mult(2, 3) == 0
    assert g.degrees == (2, 5, 3, 0)
    assert not g.is_simple()
    assert g.components() == [[0, 1, 2], [3]]
    assert not g.is_connected()


def test_rejects_loops_and_bad_vertices():
    with pytest.raises(GraphError):
        MultiGraph(3, [(1, 1)])
    with pytest.raises(GraphError):
        MultiGraph(3, [(0, 5)])
    with pytest.raises(GraphError):
        DegreeSequence((2, 0))


def test_edge_ref_sorts_endpoints():
    e = EdgeRef(3, 1)
    assert (e.u, e.v) == (1, 3)


def test_named_families():
    assert cycle(5).degrees == (2,) * 5
    assert path(4).size == 3
    assert complete(5).size == 10
    k = complete_bipartite(2, 3)
    assert k.degrees == (3, 3, 2, 2, 2)
    assert cycle_power(8, 3).degrees == (6,) * 8
    with pytest.raises(GraphError):
        cycle_power(6, 3)
    b = cycle_bundle(8, 3)
    assert b.size == 24 and b.degrees == (6,) * 8
    assert cycle_bundle(2, 2).mult(0, 1) == 4


def test_subdivide_all_numbering():
    g = subdivide_all(cycle_bundle(3, 2))
    assert g.n == 9 and g.size == 12
    assert all(g.degree(v) == 2 for v in range(3, 9))
    assert g.is_bipartite_by_degree_class(2)


def test_subdivide_edge_and_extend():
    g = subdivide_edge(cycle(4), EdgeRef(0, 1))
    assert g.n == 5 and not g.has_edge(0, 1) and g.has_edge(0, 4) and g.has_edge(4, 1)
    h = extend(cycle(4), 0, 2)
    assert h.n == 5 and h.degree(4) == 2 and h.degree(0) == 3
    with pytest.raises(GraphError):
        extend(h, 1, 1)


def test_contract_k23_edge():
    # contracting an edge of K_{2,3} leaves a simple graph on 4 vertices
    g = contract_edge(complete_bipartite(2, 3), EdgeRef(0, 2))
    assert g.n == 4 and g.size == 5 and g.is_simple()


def test_contract_set_keeps_parallel_edges():
    g = contract_set(cycle(4), {0, 2})
    assert g.n == 3 and g.mult(0, 1) == 2 and g.mult(0, 2) == 2


def test_glue_and_union():
    g = glue(cycle(3), 0, cycle(4), 0)
    assert g.n == 6 and g.degree(0) == 4
    assert disjoint_union(cycle(3), path(2)).n == 5


def test_degree_class_bipartite():
    assert complete_bipartite(2, 4).is_bipartite_by_degree_class(2)
    assert not cycle(5).is_bipartite_by_degree_class(2)


@given(multigraphs())
def test_relabel_roundtrip(g):
    perm = list(reversed(range(g.n)))
    assert g.relabel(perm).relabel(perm) == g
    assert sorted(g.relabel(perm).degrees) == sorted(g.degrees)


@given(multigraphs())
def test_handshake(g):
    assert sum(g.degrees) == 2 * g.size
    assert MultiGraph.from_matrix(g.matrix) == g


@given(multigraphs(min_n=2))
def test_add_remove_inverse(g):
    assert g.add_edge(0, 1, 2).remove_edge(0, 1, 2) == g
