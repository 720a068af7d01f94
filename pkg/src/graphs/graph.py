"""
Simple undirected graphs with indexed edge lists and adjacency bitmasks.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from src.config.settings import HARD_MAX_VERTICES
from src.core.errors import CapacityError, InputError
from src.utils.bits import iter_bits, popcount

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    Simple graph on vertices 0..n-1.

    Edges are stored sorted ascending with u < v, so edge indices are canonical.
    Two graphs compare equal iff they have the same vertex count and edge list.
    The graph on zero vertices is allowed: it is the empty shift and the
    induced subgraph on k = 0 vertices. Graph files reject it.
    """

    n: int
    edges: Tuple[Edge, ...] = ()
    adjacency: Tuple[int, ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"vertex count must be nonnegative, got {self.n}")
        if self.n > HARD_MAX_VERTICES:
            raise CapacityError(f"graph has {self.n} vertices, limit is {HARD_MAX_VERTICES}")
        adjacency = [0] * self.n
        previous: Optional[Edge] = None
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise InputError(f"invalid edge ({u}, {v}) for a graph on {self.n} vertices")
            if previous is not None and (u, v) <= previous:
                raise InputError("edges must be sorted ascending without duplicates")
            previous = (u, v)
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        object.__setattr__(self, "adjacency", tuple(adjacency))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from unordered pairs in any order; rejects loops and repeats."""
        normalized: List[Edge] = []
        for pair in edges:
            u, v = int(pair[0]), int(pair[1])
            if u == v:
                raise InputError(f"loop at vertex {u}")
            normalized.append((min(u, v), max(u, v)))
        ordered = sorted(normalized)
        if len(set(ordered)) != len(ordered):
            raise InputError("parallel edges are not allowed")
        return cls(n, tuple(ordered))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in graph.edges()))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def all_vertices(self) -> int:
        """Bitmask of all vertices."""
        return (1 << self.n) - 1

    @property
    def full_edge_mask(self) -> int:
        return (1 << self.m) - 1

    @cached_property
    def edge_index(self) -> Dict[Edge, int]:
        return {edge: i for i, edge in enumerate(self.edges)}

    def index_of(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self.edge_index[key]
        except KeyError:
            raise InputError(f"({u}, {v}) is not an edge") from None

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adjacency[v])

    def degrees(self) -> List[int]:
        return [popcount(row) for row in self.adjacency]

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adjacency[v]))

    def edge_mask_of(self, edges: Iterable[Sequence[int]]) -> int:
        mask = 0
        for pair in edges:
            mask |= 1 << self.index_of(pair[0], pair[1])
        return mask

    def edges_of_mask(self, mask: int) -> List[Edge]:
        if mask >> self.m:
            raise InputError(f"edge mask {mask:#x} exceeds the {self.m} edges of the graph")
        return [self.edges[i] for i in iter_bits(mask)]

    def edge_subgraph(self, mask: int) -> "Graph":
        """
        H[S] for the edge set S given by mask.

        The edges of self are already sorted and in range, so the constructor
        checks are skipped.
        """
        if mask < 0 or mask >> self.m:
            raise InputError(f"edge mask {mask:#x} exceeds the {self.m} edges of the graph")
        edges = self.edges
        adjacency = [0] * self.n
        chosen = []
        while mask:
            low = mask & -mask
            u, v = edges[low.bit_length() - 1]
            chosen.append((u, v))
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
            mask ^= low
        subgraph = object.__new__(Graph)
        object.__setattr__(subgraph, "n", self.n)
        object.__setattr__(subgraph, "edges", tuple(chosen))
        object.__setattr__(subgraph, "adjacency", tuple(adjacency))
        return subgraph

    @cached_property
    def key(self) -> Tuple[int, Tuple[Edge, ...]]:
        """Hashable labeled encoding used as a memo key."""
        return (self.n, self.edges)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class EdgeSubgraph:
    """An edge-subgraph H[S]: the parent's vertices with only the masked edges."""

    parent: Graph
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.parent.m:
            raise InputError(
                f"edge mask {self.mask:#x} has bits beyond the parent's {self.parent.m} edges"
            )

    @property
    def graph(self) -> Graph:
        return self.parent.edge_subgraph(self.mask)

    def is_subgraph_of(self, other: "EdgeSubgraph") -> bool:
        return self.parent == other.parent and self.mask & ~other.mask == 0


@dataclass(frozen=True)
class ColoredGraph:
    """
    A graph g colored by the vertices of a pattern graph.

    The coloring must be a homomorphism from g to the pattern: every edge of g joins
    two vertices whose colors are adjacent in the pattern.
    """

    g: Graph
    pattern: Graph
    coloring: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coloring) != self.g.n:
            raise InputError(
                f"coloring has {len(self.coloring)} entries for {self.g.n} vertices"
            )
        for vertex, color in enumerate(self.coloring):
            if not 0 <= color < self.pattern.n:
                raise InputError(f"vertex {vertex} has color {color} outside the pattern")
        for u, v in self.g.edges:
            if not self.pattern.has_edge(self.coloring[u], self.coloring[v]):
                raise InputError(
                    f"edge ({u}, {v}) maps to colors ({self.coloring[u]}, {self.coloring[v]}) "
                    "which are not adjacent in the pattern"
                )

    @cached_property
    def color_classes(self) -> Tuple[Tuple[int, ...], ...]:
        classes: List[List[int]] = [[] for _ in range(self.pattern.n)]
        for vertex, color in enumerate(self.coloring):
            classes[color].append(vertex)
        return tuple(tuple(members) for members in classes)

    @cached_property
    def class_masks(self) -> Tuple[int, ...]:
        masks = [0] * self.pattern.n
        for vertex, color in enumerate(self.coloring):
            masks[color] |= 1 << vertex
        return tuple(masks)

    def transversal_count(self) -> int:
        total = 1
        for members in self.color_classes:
            total *= len(members)
        return total
