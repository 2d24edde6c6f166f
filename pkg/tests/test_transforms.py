from __future__ import annotations

import pytest

from avgconn import connectivity as conn
from avgconn import transforms as T
from avgconn.extremal import construct_optimal_edge, construct_optimal_vertex
from avgconn.graph import EdgeRef, GraphError, MultiGraph, complete, complete_bipartite, cycle, glue, subdivide_edge
from avgconn.minimality import (
    cut_vertices,
    decompose,
    is_minimally_2_connected,
    is_minimally_2_edge_connected,
)

# two degree-3 vertices joined by an edge, each side closed off by a 4-cycle
LADDER = MultiGraph(8, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (3, 6), (4, 7), (5, 7), (6, 7)])


def k23_with_chain():
    # subdivide 0-2 twice: 0 - 6 - 5 - 2 - 1 is a chain of 4 edges
    g = subdivide_edge(complete_bipartite(2, 3), EdgeRef(0, 2))
    return subdivide_edge(g, EdgeRef(0, 5))


def test_fan_rejects_cycle():
    with pytest.raises(T.TransformError, match="degree > 2"):
        T.t_fan(cycle(6), [0, 1, 2, 3])
    assert T.fan_sites(cycle(6)) == []


def test_fan_gain_is_k_minus_2():
    g = k23_with_chain()
    sites = T.fan_sites(g)
    assert sites == [[0, 6, 5, 2, 1]]
    tr = T.t_fan(g, sites[0])
    assert tr.gain == len(sites[0]) - 1 - 2 == 2
    assert tr.after.n == g.n and is_minimally_2_connected(tr.after)


def test_fan_three_edge_chain():
    # one subdivision of K_{2,4} already gives the chain 0 - 6 - 2 - 1
    g = subdivide_edge(complete_bipartite(2, 4), EdgeRef(0, 2))
    assert T.fan_sites(g) == [[0, 6, 2, 1]]
    path = T.fan_sites(g)[0]
    assert T.t_fan(g, path).gain == 1


def test_fan_rejects_non_minimal():
    with pytest.raises(T.TransformError, match="minimally 2-connected"):
        T.t_fan(complete(4), [0, 1, 2, 3])


def test_contract_split():
    g = LADDER
    assert is_minimally_2_connected(g)
    assert T.contract_split_sites(g) == [(0, 1), (6, 7)]
    tr = T.t_contract_split(g, 0, 1)
    assert tr.after.n == g.n and tr.gain > 0
    assert tr.after.degree(g.n - 1) == 2
    assert all(conn.local_vertex_connectivity(tr.after, g.n - 1, w) == 2 for w in range(g.n - 1))


def test_contract_split_inapplicable_on_bipartite():
    g = complete_bipartite(2, 5)
    assert T.contract_split_sites(g) == []
    with pytest.raises(T.TransformError):
        T.t_contract_split(g, 0, 2)


def test_extend_contract():
    g = glue(complete_bipartite(2, 3), 2, cycle(3), 0)
    assert is_minimally_2_edge_connected(g)
    assert T.extend_contract_sites(g) == [(5, 6)]
    tr = T.e_extend_contract(g, 5, 6)
    assert tr.after.n == g.n and tr.gain >= 1
    assert tr.site["x"] == 0 and tr.site["y"] == 1
    assert is_minimally_2_edge_connected(tr.after)


def test_extend_contract_needs_anchor():
    g = glue(cycle(3), 0, cycle(4), 0)
    with pytest.raises(T.TransformError, match="lambda >= 3"):
        T.e_extend_contract(g, 1, 2)


def test_block_collapse():
    g = glue(complete_bipartite(2, 3), 2, cycle(4), 0)
    assert T.block_collapse_sites(g) == [(2, 5, 6, 7)]
    tr = T.e_block_collapse(g, (2, 5, 6, 7))
    assert tr.after.n == g.n and tr.gain > 0
    new_deg2 = [v for v in range(tr.after.n) if tr.after.degree(v) == 2]
    assert len(new_deg2) >= 3


def test_block_collapse_rejects_non_block():
    g = glue(complete_bipartite(2, 3), 2, cycle(4), 0)
    with pytest.raises(T.TransformError, match="not a block"):
        T.e_block_collapse(g, (5, 6))


def test_bridge_swap():
    g = LADDER
    assert is_minimally_2_edge_connected(g)
    assert T.bridge_swap_sites(g) == [(0, 1), (6, 7)]
    tr = T.e_bridge_swap(g, 0, 1)
    assert tr.after.n == g.n and tr.gain > 0 and is_minimally_2_edge_connected(tr.after)
    assert tr.after.degree(g.n - 1) == 2


def test_bridge_swap_inapplicable_on_witness():
    g = construct_optimal_edge(32)
    assert T.bridge_swap_sites(g) == []


def test_cut_rewire():
    k = complete_bipartite(2, 3)
    g = glue(k, 0, k, 0)
    assert T.cut_rewire_sites(g) == [0]
    tr = T.e_cut_rewire(g, 0)
    assert tr.after.n == g.n and tr.gain > 0
    assert len(cut_vertices(tr.after)) <= len(cut_vertices(g))
    assert len(decompose(tr.after).blocks_of(0)) <= len(decompose(g).blocks_of(0))


def test_cut_rewire_rejects_2_connected():
    with pytest.raises(T.TransformError, match="not a cut vertex"):
        T.e_cut_rewire(complete_bipartite(2, 5), 0)


def test_driver_vertex():
    res = T.improve_until_fixed(k23_with_chain(), "vertex")
    totals = [t.total_before for t in res.traces] + [res.traces[-1].total_after]
    assert totals == sorted(set(totals))
    assert res.fixed_point and not res.stuck
    assert res.graph.is_bipartite_by_degree_class(2)


def test_driver_edge_reaches_structure():
    g = glue(complete_bipartite(2, 3), 2, cycle(4), 0)
    res = T.improve_until_fixed(g, "edge")
    assert res.fixed_point
    assert res.traces and all(t.gain > 0 for t in res.traces)


def test_driver_leaves_witness_alone():
    res = T.improve_until_fixed(construct_optimal_vertex(32), "vertex")
    assert res.traces == [] and res.fixed_point


def test_driver_stuck_on_cycle():
    res = T.improve_until_fixed(cycle(7), "edge")
    assert res.traces == [] and res.stuck


def test_driver_limit_and_rejections():
    res = T.improve_until_fixed(k23_with_chain(), "vertex", limit=0)
    assert res.exhausted and not res.stuck
    with pytest.raises(GraphError, match="not minimally"):
        T.improve_until_fixed(complete(5), "vertex")
    with pytest.raises(GraphError, match="order"):
        T.improve_until_fixed(cycle(4), "vertex")
    with pytest.raises(ValueError):
        T.applicable(cycle(5), "both")


def test_trace_dict():
    tr = T.t_fan(k23_with_chain(), [0, 6, 5, 2, 1])
    d = tr.to_dict()
    assert d["transform"] == "t_fan" and d["total_after"] - d["total_before"] == 2
    assert d["minimal_before"] and d["minimal_after"]
