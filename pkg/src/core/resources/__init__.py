"""Small named graphs used as fixtures and worked examples."""

from .named_graphs import (
    banner,
    bowtie,
    complete_graph,
    cycle_graph,
    diamond,
    disjoint_edges,
    path_graph,
    paw,
    star_graph,
)

__all__ = [
    "banner",
    "bowtie",
    "complete_graph",
    "cycle_graph",
    "diamond",
    "disjoint_edges",
    "path_graph",
    "paw",
    "star_graph",
]
