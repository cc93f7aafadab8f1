"""Biconnected-component decomposition and the cactus predicate."""

import logging
from collections import Counter
from dataclasses import dataclass

from src.core.errors import NotConnectedError
from src.core.graph import Edge, Graph, is_connected

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Block:
    """A bridge or a maximal 2-connected subgraph."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def is_bridge(self) -> bool:
        return len(self.edges) == 1

    @property
    def is_cycle(self) -> bool:
        return len(self.edges) == len(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True, slots=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]


def biconnected_blocks(g: Graph) -> BlockDecomposition:
    """
    Split the edges of ``g`` into bridges and maximal 2-connected blocks.

    Lowpoint depth-first search with explicit stacks, so the traversal depth
    is not bounded by the interpreter's recursion limit.

    Args:
        g: Connected graph

    Returns:
        BlockDecomposition; a vertex is a cut vertex iff it lies in two or
        more blocks

    Raises:
        NotConnectedError: ``g`` is not connected
    """
    if not is_connected(g):
        raise NotConnectedError(f"{g!r} is not connected")

    adjacency = g.adjacency
    disc = [-1] * g.vertex_count
    low = [0] * g.vertex_count
    disc[0] = 0
    counter = 1

    blocks: list[Block] = []
    edge_stack: list[Edge] = []
    stack = [(0, -1, iter(adjacency[0]))]
    while stack:
        v, parent, neighbours = stack[-1]
        for w in neighbours:
            if disc[w] < 0:
                disc[w] = low[w] = counter
                counter += 1
                edge_stack.append((v, w))
                stack.append((w, v, iter(adjacency[w])))
                break
            # back edge to an ancestor; the mirror visit from the ancestor is skipped
            if w != parent and disc[w] < disc[v]:
                if disc[w] < low[v]:
                    low[v] = disc[w]
                edge_stack.append((v, w))
        else:
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                blocks.append(_pop_block(edge_stack, (u, v)))

    membership = Counter(v for block in blocks for v in block.vertices)
    cut_vertices = frozenset(v for v, count in membership.items() if count >= 2)
    logger.debug(
        "Decomposed %r into %d blocks with %d cut vertices",
        g,
        len(blocks),
        len(cut_vertices),
    )
    return BlockDecomposition(blocks=tuple(blocks), cut_vertices=cut_vertices)


def is_cactus(g: Graph, bd: BlockDecomposition | None = None) -> bool:
    """
    Check that no edge lies on more than one cycle.

    Args:
        g: Connected graph
        bd: Decomposition of ``g`` if already computed

    Raises:
        NotConnectedError: ``g`` is not connected
    """
    if bd is None:
        bd = biconnected_blocks(g)
    return all(block.is_bridge or block.is_cycle for block in bd.blocks)


def cycle_blocks(bd: BlockDecomposition) -> list[Block]:
    return [block for block in bd.blocks if not block.is_bridge]


def bridge_count(bd: BlockDecomposition) -> int:
    return sum(1 for block in bd.blocks if block.is_bridge)


def _pop_block(edge_stack: list[Edge], closing: Edge) -> Block:
    block_edges = []
    while True:
        u, v = edge_stack.pop()
        block_edges.append((u, v) if u < v else (v, u))
        if (u, v) == closing:
            break
    block_edges.sort()
    vertices = sorted({x for edge in block_edges for x in edge})
    return Block(vertices=tuple(vertices), edges=tuple(block_edges))
