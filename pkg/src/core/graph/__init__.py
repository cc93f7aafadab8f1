"""Graph representation, edge-list codec and basic queries."""

from .edge_list import from_edge_list, read_graph, to_edge_list, write_graph
from .graph import (
    Edge,
    Graph,
    check_vertex,
    degree,
    degrees,
    edges,
    from_edges,
    is_connected,
    relabel,
)

__all__ = [
    "Edge",
    "Graph",
    "check_vertex",
    "degree",
    "degrees",
    "edges",
    "from_edge_list",
    "from_edges",
    "is_connected",
    "read_graph",
    "relabel",
    "to_edge_list",
    "write_graph",
]
