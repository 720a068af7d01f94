"""
Graph constructions: edge and induced subgraphs, complements, unions,
inhabited graphs, lexicographic products and tuple-coordinate revolutions.
"""

from itertools import combinations, product
from typing import Iterable, List, Sequence, Tuple

from loguru import logger
from sympy import isprime

from src.config.settings import HARD_MAX_VERTICES
from src.core.errors import CapacityError, DomainError, InputError
from src.graphs.generators import complete_graph, empty_graph
from src.graphs.graph import Edge, Graph


def edge_subgraph(g: Graph, mask: int) -> Graph:
    """H[S]: g's vertices with exactly the edges selected by mask."""
    return g.edge_subgraph(mask)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """
    Subgraph induced by vertices, relabeled in ascending vertex order.

    Raises:
        InputError: if a vertex is out of range
    """
    chosen = sorted(set(vertices))
    for v in chosen:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range for a graph on {g.n} vertices")
    position = {v: i for i, v in enumerate(chosen)}
    edges = [
        (position[u], position[v])
        for u, v in combinations(chosen, 2)
        if g.has_edge(u, v)
    ]
    return Graph(len(chosen), tuple(edges))


def complement(g: Graph) -> Graph:
    return Graph(g.n, tuple((u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)))


def relabel(g: Graph, permutation: Sequence[int]) -> Graph:
    """Image of g under the vertex map v -> permutation[v]."""
    if sorted(permutation) != list(range(g.n)):
        raise InputError("relabeling must be a permutation of the vertex set")
    return Graph.from_edges(g.n, ((permutation[u], permutation[v]) for u, v in g.edges))


def inhabited_graph(c: Graph, parts: Sequence[Graph]) -> Graph:
    """
    C[G_1, ..., G_m]: block i holds a copy of parts[i]; blocks i and j are fully
    connected iff {i, j} is an edge of c.

    Block vertices are laid out consecutively in block order.
    """
    if len(parts) != c.n:
        raise InputError(f"inhabited graph needs {c.n} parts, got {len(parts)}")
    offsets: List[int] = []
    total = 0
    for part in parts:
        offsets.append(total)
        total += part.n
    if total > HARD_MAX_VERTICES:
        raise CapacityError(f"inhabited graph would have {total} vertices")
    edges: List[Edge] = []
    for i, part in enumerate(parts):
        edges.extend((offsets[i] + u, offsets[i] + v) for u, v in part.edges)
    for i, j in c.edges:
        edges.extend(
            (offsets[i] + u, offsets[j] + v)
            for u in range(parts[i].n)
            for v in range(parts[j].n)
        )
    return Graph.from_edges(total, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    return inhabited_graph(empty_graph(len(graphs)), graphs)


def join(*graphs: Graph) -> Graph:
    return inhabited_graph(complete_graph(len(graphs)), graphs)


def graph_union(first: Graph, second: Graph) -> Graph:
    """Edge-set union of two graphs on the same vertex set."""
    if first.n != second.n:
        raise InputError("edge-set union requires equal vertex counts")
    return Graph(first.n, tuple(sorted(set(first.edges) | set(second.edges))))


def tuple_vertices(sizes: Sequence[int]) -> List[Tuple[int, ...]]:
    """Tuple vertices in lexicographic order; list position is the vertex index."""
    return list(product(*(range(size) for size in sizes)))


def lexicographic_product(parts: Sequence[Graph]) -> Graph:
    """
    G_1 o ... o G_m on tuple vertices: (u) ~ (v) iff at the first coordinate i
    where they differ, {u_i, v_i} is an edge of G_i.
    """
    if not parts:
        raise InputError("lexicographic product needs at least one factor")
    size = 1
    for part in parts:
        size *= part.n
    if size > HARD_MAX_VERTICES:
        raise CapacityError(f"lexicographic product would have {size} vertices")
    vertices = tuple_vertices([part.n for part in parts])
    edges: List[Edge] = []
    for a, b in combinations(range(len(vertices)), 2):
        u, v = vertices[a], vertices[b]
        i = next(k for k in range(len(parts)) if u[k] != v[k])
        if parts[i].has_edge(u[i], v[i]):
            edges.append((a, b))
    logger.debug(f"Lexicographic product of {len(parts)} factors: {size} vertices, {len(edges)} edges")
    return Graph(size, tuple(edges))


def forward_revolution(p: int, m: int) -> Tuple[int, ...]:
    """
    Vertex permutation of [0, p)^m sending (a_1, ..., a_m) to (a_m, a_1, ..., a_{m-1}),
    on tuple indices in lexicographic order.

    Raises:
        DomainError: p is not prime
    """
    if not isprime(p):
        raise DomainError(f"forward revolution needs a prime, got p = {p}")
    if m < 1:
        raise InputError(f"forward revolution needs m >= 1, got {m}")
    if p**m > HARD_MAX_VERTICES:
        raise CapacityError(f"p^m = {p**m} exceeds {HARD_MAX_VERTICES} vertices")
    vertices = tuple_vertices([p] * m)
    index = {vertex: i for i, vertex in enumerate(vertices)}
    return tuple(index[(vertex[-1],) + vertex[:-1]] for vertex in vertices)
