"""Polarity index of cactus graphs from the block census."""

import logging
from enum import Enum

from src.core.cactus import (
    BlockDecomposition,
    CactusCensus,
    biconnected_blocks,
    census,
    degree_term,
    is_cactus,
)
from src.core.distance import count_distance3_pairs
from src.core.errors import (
    NotApplicableError,
    NotCactusError,
    NotConnectedError,
    OracleInconsistencyError,
)
from src.core.graph import Graph, degrees, is_connected

logger = logging.getLogger(__name__)


class Method(str, Enum):
    """How the polarity index is obtained."""

    FORMULA = "formula"
    BFS = "bfs"
    BOTH = "both"


def wp_from_census(c: CactusCensus) -> int:
    """Degree term minus the cycle and pendant-pattern corrections."""
    return (
        c.degree_term
        - 3 * c.c6
        - 5 * c.c5
        - 4 * c.c4
        - 3 * c.c3
        - 2 * c.b1
        - c.b2
    )


def wp_cactus(g: Graph, bd: BlockDecomposition | None = None) -> int:
    """
    Polarity index of a cactus in time linear in its size.

    Args:
        g: Connected cactus
        bd: Decomposition of ``g`` if already computed

    Raises:
        NotConnectedError: ``g`` is not connected
        NotCactusError: Some edge lies on two cycles
    """
    if bd is None:
        bd = biconnected_blocks(g)
    return wp_from_census(census(g, bd))


def corollary22_applicable(g: Graph, bd: BlockDecomposition | None = None) -> bool:
    """
    Check that every triangle and quadrangle has exactly one outside neighbour.

    Counted blockwise as ``sum(deg(v) - 2) == 1`` over the block's vertices,
    which is what makes each such cycle contribute exactly one pendant copy.

    Raises:
        NotConnectedError: ``g`` is not connected
        NotCactusError: Some edge lies on two cycles
    """
    if bd is None:
        bd = biconnected_blocks(g)
    if not is_cactus(g, bd):
        raise NotCactusError(f"{g!r} is not a cactus")
    deg = degrees(g)
    return all(
        sum(deg[v] - 2 for v in block.vertices) == 1
        for block in bd.blocks
        if not block.is_bridge and block.length in (3, 4)
    )


def wp_corollary22(g: Graph) -> int:
    """
    Polarity index of a cactus whose small cycles each have one outside neighbour.

    Under that hypothesis the pendant-pattern counts equal the triangle and
    quadrangle counts, leaving ``degree term - 3 c6 - 5 (c3 + c4 + c5)``.

    Raises:
        NotCactusError: Some edge lies on two cycles
        NotApplicableError: A triangle or quadrangle has zero or several
            outside neighbours
    """
    bd = biconnected_blocks(g)
    if not corollary22_applicable(g, bd):
        raise NotApplicableError(
            f"{g!r} has a triangle or quadrangle without exactly one outside neighbour"
        )
    c = census(g, bd)
    return c.degree_term - 3 * c.c6 - 5 * (c.c3 + c.c4 + c.c5)


def wp_tree(g: Graph) -> int:
    """
    Polarity index of a tree: the bare degree term.

    Raises:
        NotConnectedError: ``g`` is not connected
        NotApplicableError: ``g`` has a cycle
    """
    if not is_connected(g):
        raise NotConnectedError(f"{g!r} is not connected")
    if g.edge_count != g.vertex_count - 1:
        raise NotApplicableError(f"{g!r} is not a tree")
    return degree_term(g)


def wiener_polarity(g: Graph, method: Method | str = Method.FORMULA) -> int:
    """
    Polarity index by the chosen method.

    ``Method.BOTH`` runs the formula and the breadth-first count and fails
    loudly when they differ.

    Raises:
        NotConnectedError: ``g`` is not connected
        NotCactusError: Formula requested on a non-cactus
        OracleInconsistencyError: ``Method.BOTH`` and the two values differ
    """
    method = Method(method)
    if method is Method.FORMULA:
        return wp_cactus(g)
    if method is Method.BFS:
        return count_distance3_pairs(g)

    by_formula = wp_cactus(g)
    by_oracle = count_distance3_pairs(g)
    if by_formula != by_oracle:
        logger.error(
            "Formula/oracle disagreement on %r: %d vs %d", g, by_formula, by_oracle
        )
        raise OracleInconsistencyError(
            f"Formula gives {by_formula}, breadth-first count gives {by_oracle}"
        )
    return by_formula
