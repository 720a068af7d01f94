"""
Named graph families and random graphs.
"""

import random
from itertools import combinations
from typing import Optional

from src.graphs.graph import Graph


def empty_graph(n: int) -> Graph:
    """IS_n, the independent set on n vertices."""
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        return path_graph(n)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((u, a + v) for u in range(a) for v in range(b)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def random_graph(n: int, edge_probability: float = 0.5, rng: Optional[random.Random] = None) -> Graph:
    """G(n, p) sample; pass a seeded rng for reproducible runs."""
    rng = rng or random.Random()
    return Graph(n, tuple(pair for pair in combinations(range(n), 2) if rng.random() < edge_probability))


def all_graphs(n: int):
    """Yield every labeled graph on n vertices, in ascending mask order over K_n's edges."""
    host = complete_graph(n)
    for mask in range(1 << host.m):
        yield Graph(n, tuple(host.edges_of_mask(mask)))
