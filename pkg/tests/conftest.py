"""Shared fixtures for the test suites."""

from pathlib import Path

import pytest

from src.core.graph import Graph, to_edge_list
from src.core.resources import named_graphs


@pytest.fixture
def graph_file(tmp_path: Path):
    """Write a graph to an edge-list file and return its path."""

    def _write(g: Graph, name: str = "graph.txt") -> Path:
        path = tmp_path / name
        path.write_text(to_edge_list(g), encoding="utf-8")
        return path

    return _write


@pytest.fixture
def bowtie() -> Graph:
    return named_graphs.bowtie()


@pytest.fixture
def paw() -> Graph:
    return named_graphs.paw()


@pytest.fixture
def banner() -> Graph:
    return named_graphs.banner()


@pytest.fixture
def k4() -> Graph:
    return named_graphs.complete_graph(4)


@pytest.fixture
def diamond() -> Graph:
    return named_graphs.diamond()
