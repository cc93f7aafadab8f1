import pytest

from src.core.cactus import biconnected_blocks, bridge_count, cycle_blocks, is_cactus
from src.core.distance import count_distance3_pairs
from src.core.errors import InvalidParamsError
from src.core.generators import (
    RandomCactusParams,
    generate,
    generate_random_cactus,
    parse_random_params,
)
from src.core.graph import degrees, is_connected
from src.core.polarity import Family, legal_offsets, parse_family_spec
from src.core.resources.named_graphs import cycle_graph, path_graph

CHAIN_SPECS = [
    parse_family_spec(family, k, h, offset)
    for family in Family
    for k in range(family.min_k, 9)
    for offset in legal_offsets(family, k)
    for h in (1, 2, 5)
]


def test_generate_bowtie_sized_chain():
    g = generate(parse_family_spec("chain1", 3, 2))
    assert (g.vertex_count, g.edge_count) == (5, 6)
    assert sorted(degrees(g)) == [2, 2, 2, 2, 4]


def test_generate_meta_chain():
    g = generate(parse_family_spec("meta", 4, 2, 2))
    assert (g.vertex_count, g.edge_count) == (8, 9)
    assert count_distance3_pairs(g) == 6


def test_generate_ortho_chain():
    g = generate(parse_family_spec("ortho", 6, 3))
    assert (g.vertex_count, g.edge_count) == (18, 20)
    assert count_distance3_pairs(g) == 26


@pytest.mark.parametrize("family", list(Family))
def test_single_gon_is_a_cycle(family):
    assert generate(parse_family_spec(family, 7, 1)) == cycle_graph(7)


@pytest.mark.parametrize("spec", CHAIN_SPECS, ids=lambda s: s.label())
def test_chain_shape(spec):
    g = generate(spec)
    k, h = spec.k, spec.h
    deg = degrees(g)
    bd = biconnected_blocks(g)
    assert is_cactus(g, bd)
    assert [block.length for block in cycle_blocks(bd)] == [k] * h

    if spec.family.shares_cut_vertices:
        assert (g.vertex_count, g.edge_count) == (h * (k - 1) + 1, h * k)
        assert deg.count(4) == h - 1
        assert bridge_count(bd) == 0
    else:
        assert (g.vertex_count, g.edge_count) == (h * k, h * k + h - 1)
        assert deg.count(3) == 2 * (h - 1)
        assert bridge_count(bd) == h - 1
    assert len(bd.cut_vertices) == (h - 1 if spec.family.shares_cut_vertices else 2 * (h - 1))


def test_offset_defaults_to_half_the_gon():
    assert parse_family_spec("chain2", 7, 3).attachment_offset == 3
    assert parse_family_spec("meta", 8, 3).attachment_offset == 4
    assert parse_family_spec("chain2", 8, 3, 2).attachment_offset == 2
    assert parse_family_spec("ortho", 8, 3).attachment_offset == 1


def test_random_single_bridge():
    params = RandomCactusParams(
        block_count=1, cycle_probability=0.0, max_cycle_length=5, seed=7
    )
    assert generate_random_cactus(params) == path_graph(2)


def test_random_single_triangle():
    params = RandomCactusParams(
        block_count=1, cycle_probability=1.0, max_cycle_length=3, seed=7
    )
    assert generate_random_cactus(params) == cycle_graph(3)


def test_random_is_reproducible():
    params = parse_random_params(50, 0.5, 12, 2025)
    assert generate_random_cactus(params) == generate_random_cactus(params)


def test_random_pure_trees_and_pure_cycles():
    tree = generate_random_cactus(parse_random_params(30, 0.0, 9, 1))
    assert (tree.vertex_count, tree.edge_count) == (31, 30)
    triangles = generate_random_cactus(parse_random_params(30, 1.0, 3, 1))
    assert (triangles.vertex_count, triangles.edge_count) == (61, 90)


@pytest.mark.parametrize("chunk", range(10))
def test_random_output_is_connected_cactus(chunk):
    for seed in range(chunk * 100, (chunk + 1) * 100):
        params = RandomCactusParams(
            block_count=1 + seed % 40,
            cycle_probability=(seed % 11) / 10,
            max_cycle_length=3 + seed % 10,
            seed=seed,
        )
        g = generate_random_cactus(params)
        assert is_connected(g), f"seed {seed}"
        bd = biconnected_blocks(g)
        assert is_cactus(g, bd), f"seed {seed}"
        cycles = cycle_blocks(bd)
        assert len(bd.blocks) == params.block_count
        assert g.edge_count - g.vertex_count + 1 == len(cycles)
        assert all(3 <= block.length <= params.max_cycle_length for block in cycles)


@pytest.mark.parametrize(
    "block_count, cycle_probability, max_cycle_length, seed",
    [
        (0, 0.5, 5, 1),
        (5, -0.1, 5, 1),
        (5, 1.5, 5, 1),
        (5, 0.5, 2, 1),
        (5, 0.5, 5, -1),
        (5, 0.5, 5, 2**64),
    ],
)
def test_invalid_random_params(block_count, cycle_probability, max_cycle_length, seed):
    with pytest.raises(InvalidParamsError):
        parse_random_params(block_count, cycle_probability, max_cycle_length, seed)
