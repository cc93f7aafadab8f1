"""Block decomposition, cactus predicate and census."""

from .blocks import (
    Block,
    BlockDecomposition,
    biconnected_blocks,
    bridge_count,
    cycle_blocks,
    is_cactus,
)
from .census import CactusCensus, census, degree_term
from .induced import (
    connected_subsets,
    count_induced_g1_bruteforce,
    count_induced_g2_bruteforce,
)

__all__ = [
    "Block",
    "BlockDecomposition",
    "CactusCensus",
    "biconnected_blocks",
    "bridge_count",
    "census",
    "connected_subsets",
    "count_induced_g1_bruteforce",
    "count_induced_g2_bruteforce",
    "cycle_blocks",
    "degree_term",
    "is_cactus",
]
