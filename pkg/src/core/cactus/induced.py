"""Exhaustive induced-subgraph counts for the two pendant patterns.

These are slow reference counters for the census, independent of the block
decomposition. Connected vertex subsets of the pattern size are enumerated
with the ESU extension scheme (each connected subset exactly once) and the
induced subgraph is classified by its degree sequence.
"""

from collections.abc import Iterator, Sequence

from src.core.consts import BRUTEFORCE_MAX_VERTICES
from src.core.errors import TooLargeError
from src.core.graph import Graph

# triangle with one pendant edge
G1_DEGREES = (1, 2, 2, 3)
# quadrangle with one pendant edge
G2_DEGREES = (1, 2, 2, 2, 3)


def count_induced_g1_bruteforce(g: Graph) -> int:
    """
    Count 4-vertex subsets inducing a triangle with one pendant edge.

    Raises:
        TooLargeError: ``g`` has more than ``BRUTEFORCE_MAX_VERTICES`` vertices
    """
    _check_size(g)
    neighbour_sets = [frozenset(nbrs) for nbrs in g.adjacency]
    # (1, 2, 2, 3) on four vertices can only be the paw
    return sum(
        1
        for subset in connected_subsets(g, 4)
        if _induced_degrees(neighbour_sets, subset)[0] == G1_DEGREES
    )


def count_induced_g2_bruteforce(g: Graph) -> int:
    """
    Count 5-vertex subsets inducing a quadrangle with one pendant edge.

    The degree sequence (1, 2, 2, 2, 3) is shared with a triangle carrying a
    two-edge tail, so the pendant vertex must also hang off the degree-3
    vertex.

    Raises:
        TooLargeError: ``g`` has more than ``BRUTEFORCE_MAX_VERTICES`` vertices
    """
    _check_size(g)
    neighbour_sets = [frozenset(nbrs) for nbrs in g.adjacency]
    count = 0
    for subset in connected_subsets(g, 5):
        sequence, inner = _induced_degrees(neighbour_sets, subset)
        if sequence != G2_DEGREES:
            continue
        pendant = next(v for v in subset if inner[v] == 1)
        (anchor,) = neighbour_sets[pendant].intersection(subset)
        if inner[anchor] == 3:
            count += 1
    return count


def connected_subsets(g: Graph, size: int) -> Iterator[tuple[int, ...]]:
    """Yield every connected vertex subset of ``size`` vertices exactly once."""
    adjacency = g.adjacency
    for root in range(g.vertex_count):
        extension = {w for w in adjacency[root] if w > root}
        yield from _extend(adjacency, (root,), extension, root, size)


def _extend(
    adjacency: Sequence[Sequence[int]],
    subset: tuple[int, ...],
    extension: set[int],
    root: int,
    size: int,
) -> Iterator[tuple[int, ...]]:
    if len(subset) == size:
        yield subset
        return
    closed = set(subset).union(*(adjacency[x] for x in subset))
    extension = set(extension)
    while extension:
        w = extension.pop()
        exclusive = {u for u in adjacency[w] if u > root and u not in closed}
        yield from _extend(adjacency, subset + (w,), extension | exclusive, root, size)


def _induced_degrees(
    neighbour_sets: Sequence[frozenset[int]], subset: tuple[int, ...]
) -> tuple[tuple[int, ...], dict[int, int]]:
    members = frozenset(subset)
    inner = {v: len(neighbour_sets[v] & members) for v in subset}
    return tuple(sorted(inner.values())), inner


def _check_size(g: Graph) -> None:
    if g.vertex_count > BRUTEFORCE_MAX_VERTICES:
        raise TooLargeError(g.vertex_count, BRUTEFORCE_MAX_VERTICES)
