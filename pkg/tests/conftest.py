"""
Pytest configuration and fixtures.
"""

import os
import random
from typing import Callable

import pytest

# Keep the test run independent of a developer's .env
os.environ.setdefault("INDSUB_LOG_LEVEL", "WARNING")

from src.fields.gf import FieldSpec, field_make  # noqa: E402
from src.graphs.generators import (  # noqa: E402
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    petersen_graph,
    random_graph,
)
from src.graphs.graph import Graph  # noqa: E402
from src.properties.builtins import builtin_handle  # noqa: E402
from src.properties.handle import PropertyHandle  # noqa: E402


@pytest.fixture
def k3() -> Graph:
    return complete_graph(3)


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def p3() -> Graph:
    """Path on three vertices."""
    return path_graph(3)


@pytest.fixture
def is3() -> Graph:
    return empty_graph(3)


@pytest.fixture
def k22() -> Graph:
    return complete_bipartite_graph(2, 2)


@pytest.fixture
def petersen() -> Graph:
    return petersen_graph()


@pytest.fixture
def bipartite() -> PropertyHandle:
    return builtin_handle("bipartite")


@pytest.fixture
def independent() -> PropertyHandle:
    return builtin_handle("independent")


@pytest.fixture
def phi2_3() -> PropertyHandle:
    """bipartite or has_independent_set(3)."""
    return builtin_handle("phi2_3")


@pytest.fixture
def f11() -> FieldSpec:
    return field_make(11)


@pytest.fixture
def f4() -> FieldSpec:
    return field_make(2, 2)


@pytest.fixture
def rng() -> random.Random:
    """Seeded generator so random instances are reproducible."""
    return random.Random(20240611)


@pytest.fixture
def random_graph_factory(rng) -> Callable[..., Graph]:
    """Random graphs drawn from the seeded generator."""

    def make(n: int, edge_probability: float = 0.5) -> Graph:
        return random_graph(n, edge_probability, rng)

    return make


@pytest.fixture
def graph_file(tmp_path) -> Callable[[str, Graph], str]:
    """Write a graph in the text format and return its path."""
    from src.graphs.io import save_graph

    def write(name: str, g: Graph) -> str:
        path = tmp_path / name
        save_graph(g, path)
        return str(path)

    return write
