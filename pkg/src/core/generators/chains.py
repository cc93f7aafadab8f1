"""Constructors for the chain k-gon cactus families."""

import logging

from src.core.graph import Edge, Graph, from_edges
from src.core.polarity.families import FamilySpec

logger = logging.getLogger(__name__)


def generate(spec: FamilySpec) -> Graph:
    """
    Build the chain cactus described by ``spec``.

    Gons are laid out in a row. On every gon the incoming attachment sits at
    cyclic position 0 and the outgoing one at ``spec.attachment_offset``
    (1 for the adjacent-attachment families). Vertex-sharing families glue
    the outgoing vertex of one gon to position 0 of the next; bridge-linked
    families join them with an edge instead.

    ``h = 1`` gives a bare cycle.

    Returns:
        Connected cactus with ``h(k-1)+1`` vertices and ``hk`` edges for the
        vertex-sharing families, ``hk`` vertices and ``hk+h-1`` edges for the
        bridge-linked ones
    """
    k = spec.k
    shared = spec.family.shares_cut_vertices
    edge_list: list[Edge] = []
    next_vertex = 0
    outgoing: int | None = None

    for _ in range(spec.h):
        if shared and outgoing is not None:
            ring = [outgoing, *range(next_vertex, next_vertex + k - 1)]
        else:
            ring = list(range(next_vertex, next_vertex + k))
            if outgoing is not None:
                edge_list.append((outgoing, ring[0]))
        next_vertex = max(ring) + 1
        edge_list.extend(zip(ring, ring[1:] + ring[:1]))
        outgoing = ring[spec.attachment_offset]

    graph = from_edges(next_vertex, edge_list)
    logger.debug("Generated %s: %r", spec.label(), graph)
    return graph
