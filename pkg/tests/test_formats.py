from __future__ import annotations

import pytest
from hypothesis import given

from avgconn.formats import (
    ParseError,
    detect_format,
    format_graph,
    from_edgelist,
    from_graph6,
    parse_graph,
    read_graph6_stream,
    to_edgelist,
    to_graph6,
)
from avgconn.graph import GraphError, complete_bipartite, cycle_bundle

from conftest import multigraphs, simple_graphs


def test_graph6_known_string():
    assert to_graph6(complete_bipartite(2, 3)) == "D]o"
    assert from_graph6(">>graph6<<D]o") == complete_bipartite(2, 3)


def test_graph6_rejects_multigraph():
    with pytest.raises(GraphError):
        to_graph6(cycle_bundle(3, 2))


def test_edgelist_layout():
    text = to_edgelist(cycle_bundle(3, 2))
    assert text.splitlines() == ["3 3", "0 1 2", "0 2 2", "1 2 2"]


def test_edgelist_errors_have_positions():
    with pytest.raises(ParseError) as err:
        from_edgelist("3 1\n0 x 1\n")
    assert err.value.line == 2
    with pytest.raises(ParseError):
        from_edgelist("3 2\n0 1 1\n")
    with pytest.raises(ParseError):
        from_edgelist("3 1\n0 0 1\n")


def test_detect_and_stream():
    assert detect_format("D]o\n") == "graph6"
    assert detect_format("# c\n2 1\n0 1 1\n") == "edgelist"
    gs = list(read_graph6_stream(["D]o", "", "Bw"]))
    assert [g.n for g in gs] == [5, 3]
    with pytest.raises(ParseError):
        parse_graph("D]o\nBw\n", "graph6")


@given(multigraphs())
def test_edgelist_roundtrip(g):
    assert from_edgelist(to_edgelist(g)) == g
    assert parse_graph(format_graph(g)) == g


@given(simple_graphs())
def test_graph6_roundtrip(g):
    assert from_graph6(to_graph6(g)) == g
