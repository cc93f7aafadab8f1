"""Seeded random cactus generator for the verification harness."""

import logging

import numpy as np
from pydantic import BaseModel, Field, ValidationError

from src.core.errors import InvalidParamsError
from src.core.graph import Edge, Graph, from_edges

logger = logging.getLogger(__name__)


class RandomCactusParams(BaseModel):
    """Parameters of the block-by-block random cactus process."""

    block_count: int = Field(ge=1, description="Number of blocks to attach")
    cycle_probability: float = Field(
        ge=0.0, le=1.0, description="Chance that a block is a cycle rather than a bridge"
    )
    max_cycle_length: int = Field(ge=3, description="Longest cycle that may be drawn")
    seed: int = Field(ge=0, lt=2**64, description="PRNG seed")

    model_config = {"extra": "forbid", "frozen": True}


def parse_random_params(
    block_count: int, cycle_probability: float, max_cycle_length: int, seed: int
) -> RandomCactusParams:
    """
    Build RandomCactusParams, converting validation failures into InvalidParamsError.
    """
    try:
        return RandomCactusParams(
            block_count=block_count,
            cycle_probability=cycle_probability,
            max_cycle_length=max_cycle_length,
            seed=seed,
        )
    except ValidationError as exc:
        error = exc.errors()[0]
        raise InvalidParamsError(f"{error['loc'][0]}: {error['msg']}") from exc


def generate_random_cactus(p: RandomCactusParams) -> Graph:
    """
    Grow a cactus from a single vertex, one block at a time.

    Each step picks an anchor uniformly among the vertices present so far,
    then either closes a cycle of uniform length in ``[3, max_cycle_length]``
    through it or hangs a pendant edge off it. All draws come from one
    ``numpy`` generator seeded with ``p.seed``, so the same parameters always
    give the same edge set.
    """
    rng = np.random.default_rng(p.seed)
    coins = rng.random(p.block_count).tolist()
    picks = rng.random(p.block_count).tolist()
    lengths = rng.integers(3, p.max_cycle_length, size=p.block_count, endpoint=True).tolist()

    edge_list: list[Edge] = []
    vertex_count = 1
    for coin, pick, length in zip(coins, picks, lengths):
        anchor = min(int(pick * vertex_count), vertex_count - 1)
        if coin < p.cycle_probability:
            ring = [anchor, *range(vertex_count, vertex_count + length - 1)]
            edge_list.extend(zip(ring, ring[1:] + ring[:1]))
            vertex_count += length - 1
        else:
            edge_list.append((anchor, vertex_count))
            vertex_count += 1

    graph = from_edges(vertex_count, edge_list)
    logger.debug("Random cactus %s -> %r", p.model_dump(), graph)
    return graph
