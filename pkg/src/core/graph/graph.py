"""Immutable simple undirected graph and its basic queries."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from src.core.errors import (
    DuplicateEdgeError,
    EmptyGraphError,
    ParseError,
    SelfLoopError,
    VertexOutOfRangeError,
)

Edge = tuple[int, int]


@dataclass(frozen=True, slots=True)
class Graph:
    """
    Simple undirected graph on the vertices ``0 .. vertex_count - 1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``. Two graphs
    compare equal iff they have the same vertex count and edge set.

    Build instances through ``from_edges`` (or the edge-list parser); the
    raw constructor trusts its input.
    """

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "edge_count", sum(map(len, self.adjacency)) // 2)

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


def from_edges(vertex_count: int, edges: Iterable[Edge]) -> Graph:
    """
    Build a validated graph from an edge iterable.

    Args:
        vertex_count: Number of vertices (ids are ``0 .. vertex_count - 1``)
        edges: Pairs ``(u, v)`` in any orientation and order

    Returns:
        Graph with sorted adjacency lists

    Raises:
        VertexOutOfRangeError: An endpoint is not a declared vertex
        SelfLoopError: An edge ``(v, v)``
        DuplicateEdgeError: The same edge listed twice (either orientation)
    """
    if vertex_count < 0:
        raise ParseError(f"Vertex count must be non-negative, got {vertex_count}")

    adjacency: list[list[int]] = [[] for _ in range(vertex_count)]
    for u, v in edges:
        if not 0 <= u < vertex_count:
            raise VertexOutOfRangeError(u, vertex_count)
        if not 0 <= v < vertex_count:
            raise VertexOutOfRangeError(v, vertex_count)
        if u == v:
            raise SelfLoopError(u)
        adjacency[u].append(v)
        adjacency[v].append(u)

    for u, nbrs in enumerate(adjacency):
        nbrs.sort()
        if len(set(nbrs)) != len(nbrs):
            duplicate = next(a for a, b in zip(nbrs, nbrs[1:]) if a == b)
            raise DuplicateEdgeError(u, duplicate)

    return Graph(vertex_count, tuple(map(tuple, adjacency)))


def edges(g: Graph) -> list[Edge]:
    """Return the edges as ``(u, v)`` pairs with ``u < v``, lexicographically sorted."""
    return [(u, v) for u, nbrs in enumerate(g.adjacency) for v in nbrs if u < v]


def degree(g: Graph, v: int) -> int:
    """Number of neighbours of ``v``."""
    check_vertex(g, v)
    return len(g.adjacency[v])


def degrees(g: Graph) -> list[int]:
    return [len(nbrs) for nbrs in g.adjacency]


def is_connected(g: Graph) -> bool:
    """
    Check whether a traversal from vertex 0 reaches every vertex.

    Raises:
        EmptyGraphError: The graph has no vertices
    """
    if g.vertex_count == 0:
        raise EmptyGraphError("Connectivity is undefined for the empty graph")

    seen = bytearray(g.vertex_count)
    seen[0] = 1
    reached = 1
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = 1
                reached += 1
                stack.append(w)
    return reached == g.vertex_count


def relabel(g: Graph, permutation: Sequence[int]) -> Graph:
    """
    Return the isomorphic copy where vertex ``v`` becomes ``permutation[v]``.

    Raises:
        ParseError: ``permutation`` is not a permutation of the vertex ids
    """
    if sorted(permutation) != list(range(g.vertex_count)):
        raise ParseError("Relabeling must be a permutation of the vertex ids")
    return from_edges(
        g.vertex_count, ((permutation[u], permutation[v]) for u, v in edges(g))
    )


def check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.vertex_count:
        raise VertexOutOfRangeError(v, g.vertex_count)
