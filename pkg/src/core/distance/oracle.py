"""Breadth-first distance computations used as the ground truth.

Everything here works from plain traversals and knows nothing about
blocks or cycles, so it can arbitrate the closed formulas.
"""

import logging
from collections import deque
from dataclasses import dataclass

from src.core.consts import ORACLE_RADIUS
from src.core.errors import NotConnectedError, OracleInconsistencyError
from src.core.graph import Graph, check_vertex, is_connected

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class DistanceProfile:
    """
    Distances from ``source`` truncated at ``radius``.

    ``dist[v]`` is the exact distance when it is at most ``radius`` and
    ``None`` when ``v`` is farther away or unreachable.
    """

    source: int
    radius: int
    dist: tuple[int | None, ...]

    def at_distance(self, k: int) -> list[int]:
        return [v for v, d in enumerate(self.dist) if d == k]


def distance_profile(g: Graph, source: int, radius: int = ORACLE_RADIUS) -> DistanceProfile:
    check_vertex(g, source)
    dist: list[int | None] = [None] * g.vertex_count
    for v, d in _ball(g, source, radius).items():
        dist[v] = d
    return DistanceProfile(source=source, radius=radius, dist=tuple(dist))


def count_distance3_pairs(g: Graph) -> int:
    """
    Count unordered vertex pairs at distance exactly 3.

    Runs a breadth-first search truncated at depth 3 from every vertex and
    halves the ordered count.

    Raises:
        NotConnectedError: ``g`` is not connected
    """
    _require_connected(g)
    adjacency = g.adjacency
    ordered = 0
    for source in range(g.vertex_count):
        seen = {source}
        frontier = [source]
        for _ in range(ORACLE_RADIUS):
            following = []
            for u in frontier:
                for w in adjacency[u]:
                    if w not in seen:
                        seen.add(w)
                        following.append(w)
            frontier = following
            if not frontier:
                break
        ordered += len(frontier)

    logger.debug("Distance-3 sweep over %r: %d ordered pairs", g, ordered)
    if ordered % 2:
        raise OracleInconsistencyError(f"Ordered distance-3 count {ordered} is odd")
    return ordered // 2


def wiener_index(g: Graph) -> int:
    """
    Sum of distances over all unordered vertex pairs.

    Raises:
        NotConnectedError: ``g`` is not connected
    """
    _require_connected(g)
    total = 0
    for source in range(g.vertex_count):
        total += sum(_bfs(g, source))
    if total % 2:
        raise OracleInconsistencyError(f"Ordered distance sum {total} is odd")
    return total // 2


def distance(g: Graph, u: int, v: int) -> int:
    """
    Shortest-path edge count between ``u`` and ``v``.

    Raises:
        VertexOutOfRangeError: ``u`` or ``v`` is not a vertex
        NotConnectedError: ``g`` is not connected
    """
    check_vertex(g, u)
    check_vertex(g, v)
    _require_connected(g)
    if u == v:
        return 0

    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in g.adjacency[x]:
            if w not in dist:
                if w == v:
                    return dist[x] + 1
                dist[w] = dist[x] + 1
                queue.append(w)
    raise OracleInconsistencyError(f"Vertex {v} unreachable from {u} in a connected graph")


def boiling_point(w: int, wp: int, a: float, b: float, c: float) -> float:
    """Evaluate the linear boiling-point model ``a*W + b*Wp + c``."""
    return float(a * w + b * wp + c)


def boiling_point_of(g: Graph, a: float, b: float, c: float) -> float:
    """Boiling-point model with both indices taken from the oracle."""
    return boiling_point(wiener_index(g), count_distance3_pairs(g), a, b, c)


def _ball(g: Graph, source: int, radius: int) -> dict[int, int]:
    seen = {source: 0}
    frontier = [source]
    for level in range(1, radius + 1):
        following = []
        for u in frontier:
            for w in g.adjacency[u]:
                if w not in seen:
                    seen[w] = level
                    following.append(w)
        frontier = following
        if not frontier:
            break
    return seen


def _bfs(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise NotConnectedError(f"{g!r} is not connected")
