"""Average connectivity and average edge-connectivity of multigraphs."""

from __future__ import annotations

__version__ = "0.1.0"

from .graph import (
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
from .connectivity import (
    ConnectivityReport,
    average_connectivity,
    global_connectivity,
    is_ideally_connected,
    is_ideally_edge_connected,
    local_connectivity,
    local_edge_connectivity,
    local_vertex_connectivity,
    report,
    total_connectivity,
)
from .minimality import (
    decompose,
    is_minimally_2_connected,
    is_minimally_2_edge_connected,
    is_minimally_k_connected,
    is_necklace,
)
from .extremal import exact_bound, general_bound, kappa_bound, lambda_bound, potential
from .transforms import TransformError, TransformTrace, improve_until_fixed
from .formats import ParseError, format_graph, parse_graph

__all__ = [
    "__version__",
    "EdgeRef",
    "GraphError",
    "MultiGraph",
    "complete",
    "complete_bipartite",
    "contract_edge",
    "contract_set",
    "cycle",
    "cycle_bundle",
    "cycle_power",
    "disjoint_union",
    "extend",
    "glue",
    "path",
    "subdivide_all",
    "subdivide_edge",
    "ConnectivityReport",
    "average_connectivity",
    "global_connectivity",
    "is_ideally_connected",
    "is_ideally_edge_connected",
    "local_connectivity",
    "local_edge_connectivity",
    "local_vertex_connectivity",
    "report",
    "total_connectivity",
    "decompose",
    "is_minimally_2_connected",
    "is_minimally_2_edge_connected",
    "is_minimally_k_connected",
    "is_necklace",
    "exact_bound",
    "general_bound",
    "kappa_bound",
    "lambda_bound",
    "potential",
    "TransformError",
    "TransformTrace",
    "improve_until_fixed",
    "ParseError",
    "format_graph",
    "parse_graph",
]
