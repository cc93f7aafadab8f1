"""Small named graphs used as fixtures."""

from src.core.graph import Graph, from_edges


def path_graph(n: int) -> Graph:
    return from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """Centre 0 joined to ``leaves`` pendant vertices."""
    return from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_graph(n: int) -> Graph:
    return from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def bowtie() -> Graph:
    """Two triangles sharing vertex 0."""
    return from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


def paw() -> Graph:
    """Triangle 0-1-2 with pendant vertex 3 on vertex 0."""
    return from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def banner() -> Graph:
    """Quadrangle 0-1-2-3 with pendant vertex 4 on vertex 0."""
    return from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)])


def diamond() -> Graph:
    """Two triangles sharing the edge 0-1."""
    return from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])


def disjoint_edges() -> Graph:
    return from_edges(4, [(0, 1), (2, 3)])
