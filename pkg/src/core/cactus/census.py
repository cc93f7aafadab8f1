"""Census of the structural counts consumed by the cactus polarity formula."""

import logging
from itertools import chain

import numpy as np
from pydantic import BaseModel, Field

from src.core.cactus.blocks import BlockDecomposition, biconnected_blocks, is_cactus
from src.core.errors import NotCactusError
from src.core.graph import Graph, degrees

logger = logging.getLogger(__name__)


class CactusCensus(BaseModel):
    """Cycle counts, pendant-pattern counts and the degree term of a cactus."""

    c3: int = Field(ge=0, description="Number of triangles")
    c4: int = Field(ge=0, description="Number of quadrangles")
    c5: int = Field(ge=0, description="Number of pentagons")
    c6: int = Field(ge=0, description="Number of hexagons")
    b1: int = Field(ge=0, description="Induced triangle-plus-pendant-edge copies")
    b2: int = Field(ge=0, description="Induced quadrangle-plus-pendant-edge copies")
    degree_term: int = Field(
        ge=0, description="Sum over edges uv of (deg(u) - 1)(deg(v) - 1)"
    )
    cycles_by_length: dict[int, int] = Field(
        default_factory=dict,
        exclude=True,
        description="Cycle count for every length present",
    )

    model_config = {"extra": "forbid", "frozen": True}


def degree_term(g: Graph) -> int:
    """Sum over edges ``uv`` of ``(deg(u) - 1)(deg(v) - 1)``, each edge once."""
    n = g.vertex_count
    deg = np.fromiter(map(len, g.adjacency), dtype=np.int64, count=n)
    heads = np.repeat(np.arange(n, dtype=np.int64), deg)
    tails = np.fromiter(
        chain.from_iterable(g.adjacency), dtype=np.int64, count=2 * g.edge_count
    )
    once = heads < tails
    return int(((deg[heads[once]] - 1) * (deg[tails[once]] - 1)).sum())


def census(g: Graph, bd: BlockDecomposition | None = None) -> CactusCensus:
    """
    Count everything the cactus formula subtracts from the degree term.

    Cycle lengths are read off the cycle blocks. The pendant-pattern counts
    use the block-local identity: for a triangle (quadrangle) block the
    number of induced copies hanging off it is the sum of ``deg(v) - 2`` over
    its vertices. The identity needs the cactus property, which guarantees
    no outside vertex sees two vertices of the same cycle.

    Args:
        g: Connected cactus
        bd: Decomposition of ``g`` if already computed

    Returns:
        CactusCensus for ``g``

    Raises:
        NotConnectedError: ``g`` is not connected
        NotCactusError: Some edge lies on two cycles
    """
    if bd is None:
        bd = biconnected_blocks(g)
    if not is_cactus(g, bd):
        raise NotCactusError(f"{g!r} is not a cactus")

    deg = degrees(g)
    cycles_by_length: dict[int, int] = {}
    pendant_counts = {3: 0, 4: 0}
    for block in bd.blocks:
        if block.is_bridge:
            continue
        cycles_by_length[block.length] = cycles_by_length.get(block.length, 0) + 1
        if block.length in pendant_counts:
            pendant_counts[block.length] += sum(deg[v] - 2 for v in block.vertices)

    result = CactusCensus(
        c3=cycles_by_length.get(3, 0),
        c4=cycles_by_length.get(4, 0),
        c5=cycles_by_length.get(5, 0),
        c6=cycles_by_length.get(6, 0),
        b1=pendant_counts[3],
        b2=pendant_counts[4],
        degree_term=degree_term(g),
        cycles_by_length=dict(sorted(cycles_by_length.items())),
    )
    logger.debug("Census of %r: %s", g, result)
    return result
