from __future__ import annotations

import os

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from avgconn.graph import MultiGraph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def multigraphs(draw, min_n=2, max_n=7, max_mult=3, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mults = draw(st.lists(st.integers(0, max_mult), min_size=len(pairs), max_size=len(pairs)))
    edges = [(u, v, c) for (u, v), c in zip(pairs, mults) if c]
    if connected:
        # thread a path so the graph is connected
        edges += [(i, i + 1, 1) for i in range(n - 1)]
    return MultiGraph(n, edges)


def simple_graphs(**kw):
    return multigraphs(max_mult=1, **kw)


def to_nx(g: MultiGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(uv for uv, _ in g.pairs)
    return h


def atlas(n_max: int):
    """Every simple graph with 2..n_max vertices from the networkx atlas."""
    for h in nx.graph_atlas_g():
        if 2 <= h.number_of_nodes() <= n_max:
            yield MultiGraph(h.number_of_nodes(), h.edges())


@pytest.fixture(scope="session")
def k23():
    from avgconn.graph import complete_bipartite

    return complete_bipartite(2, 3)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        ok, title, note = RESULTS[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {title}{' - ' + note if note else ''}")
