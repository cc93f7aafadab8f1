"""Graph builders and converters shared by the test modules."""

import networkx as nx
import numpy as np

from src.core.generators import RandomCactusParams, generate_random_cactus
from src.core.graph import Graph, edges, from_edges


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.vertex_count))
    G.add_edges_from(edges(g))
    return G


def random_connected_graph(n: int, extra_edges: int, seed: int) -> Graph:
    """Random spanning tree plus up to ``extra_edges`` random chords."""
    rng = np.random.default_rng(seed)
    edge_set = {(int(rng.integers(0, v)), v) for v in range(1, n)}
    for _ in range(extra_edges if n > 2 else 0):
        u, v = sorted(int(x) for x in rng.choice(n, size=2, replace=False))
        edge_set.add((u, v))
    return from_edges(n, edge_set)


def random_cactus(
    seed: int, max_blocks: int = 20, max_cycle: int = 8, p_cycle: float | None = None
) -> Graph:
    rng = np.random.default_rng(seed)
    return generate_random_cactus(
        RandomCactusParams(
            block_count=int(rng.integers(1, max_blocks, endpoint=True)),
            cycle_probability=float(rng.random()) if p_cycle is None else p_cycle,
            max_cycle_length=max_cycle,
            seed=seed,
        )
    )


def random_permutation(n: int, seed: int) -> list[int]:
    return [int(x) for x in np.random.default_rng(seed).permutation(n)]
