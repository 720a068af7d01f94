"""
Edge orbits and the fixed-point lattice of a group acting on a host graph.

A fixed point is a union of edge orbits; it is stored as a bitmask over orbit
indices (its orbit factorization) and its level is the number of orbits used.
"""

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from loguru import logger

from src.config.settings import settings
from src.core.errors import CapacityError, InputError
from src.graphs.graph import Edge, Graph
from src.graphs.operations import edge_subgraph
from src.groups.group import GeneratedGroup
from src.utils.bits import iter_bits, popcount, submasks


@dataclass(frozen=True)
class EdgeOrbit:
    """An orbit of host edges; representative is its lowest edge index."""

    host: Graph
    edge_mask: int
    representative: int

    @property
    def size(self) -> int:
        return popcount(self.edge_mask)

    @property
    def edges(self) -> List[Edge]:
        return self.host.edges_of_mask(self.edge_mask)


def _edge_image(host: Graph, generator: Tuple[int, ...], edge: Edge) -> Optional[int]:
    u, v = generator[edge[0]], generator[edge[1]]
    if u > v:
        u, v = v, u
    return host.edge_index.get((u, v))


def edge_orbits(group: GeneratedGroup, host: Graph) -> List[EdgeOrbit]:
    """
    Orbits of host edges under the group, by closure under the generators.

    Orbits come out sorted by representative edge index.

    Raises:
        InputError: group degree differs from the vertex count, or a generator is
            not an automorphism of host
    """
    if group.degree != host.n:
        raise InputError(f"{group.name} acts on {group.degree} points but the host has {host.n} vertices")
    images: List[List[int]] = []
    for generator in group.generators:
        row = []
        for edge in host.edges:
            target = _edge_image(host, generator, edge)
            if target is None:
                raise InputError(f"generator of {group.name} maps edge {edge} to a non-edge")
            row.append(target)
        images.append(row)

    assigned = [False] * host.m
    orbits: List[EdgeOrbit] = []
    for start in range(host.m):
        if assigned[start]:
            continue
        assigned[start] = True
        mask = 1 << start
        frontier = [start]
        while frontier:
            current = frontier.pop()
            for row in images:
                target = row[current]
                if not assigned[target]:
                    assigned[target] = True
                    mask |= 1 << target
                    frontier.append(target)
        orbits.append(EdgeOrbit(host, mask, start))
    logger.debug(f"{group.name} on {host}: {len(orbits)} edge orbits")
    return orbits


@dataclass(frozen=True)
class FixedPoint:
    """
    A fixed point of the action: the union of the orbits selected by orbit_set.

    Attributes:
        host: the host graph
        orbit_set: bitmask over orbit indices
        edges: bitmask over host edge indices
        level: number of orbits in orbit_set
    """

    host: Graph
    orbit_set: int
    edges: int
    level: int

    @property
    def graph(self) -> Graph:
        return edge_subgraph(self.host, self.edges)

    @property
    def edge_count(self) -> int:
        return popcount(self.edges)

    def is_sub_point_of(self, other: "FixedPoint") -> bool:
        return self.orbit_set & ~other.orbit_set == 0

    def orbit_indices(self) -> List[int]:
        return list(iter_bits(self.orbit_set))

    def to_json(self) -> Dict:
        return {
            "orbits": self.orbit_indices(),
            "level": self.level,
            "edges": [list(edge) for edge in self.host.edges_of_mask(self.edges)],
        }


class FixedPointLattice:
    """All fixed points of a group acting on a host graph, indexed by orbit set."""

    def __init__(self, group: GeneratedGroup, host: Graph):
        self.group = group
        self.host = host
        self.orbits = edge_orbits(group, host)
        self.orbit_masks = [orbit.edge_mask for orbit in self.orbits]
        self._orbit_of_edge = [0] * host.m
        for i, orbit in enumerate(self.orbits):
            for e in iter_bits(orbit.edge_mask):
                self._orbit_of_edge[e] = i

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)

    @property
    def top_level(self) -> int:
        return len(self.orbits)

    def require_enumerable(self) -> None:
        """
        Raises:
            CapacityError: more orbits than the configured cap
        """
        if self.orbit_count > settings.max_orbits:
            raise CapacityError(
                f"{self.group.name} has {self.orbit_count} edge orbits on the host, "
                f"fixed-point enumeration is capped at {settings.max_orbits}"
            )

    def edges_of(self, orbit_set: int) -> int:
        edges = 0
        for i in iter_bits(orbit_set):
            edges |= self.orbit_masks[i]
        return edges

    def point(self, orbit_set: int) -> FixedPoint:
        if orbit_set < 0 or orbit_set >> self.orbit_count:
            raise InputError(f"orbit set {orbit_set:#x} exceeds {self.orbit_count} orbits")
        return FixedPoint(self.host, orbit_set, self.edges_of(orbit_set), popcount(orbit_set))

    def from_edge_mask(self, mask: int) -> FixedPoint:
        """
        Unique orbit factorization of an edge set.

        Raises:
            InputError: the edge set is not a union of orbits
        """
        orbit_set = 0
        for e in iter_bits(mask):
            orbit_set |= 1 << self._orbit_of_edge[e]
        if self.edges_of(orbit_set) != mask:
            raise InputError("edge set is not a union of edge orbits, so not a fixed point")
        return self.point(orbit_set)

    def from_graph(self, g: Graph) -> FixedPoint:
        if g.n != self.host.n:
            raise InputError("graph and host have different vertex counts")
        mask = self.host.edge_mask_of(g.edges)
        return self.from_edge_mask(mask)

    def is_fixed(self, mask: int) -> bool:
        """True iff every generator maps the edge set onto itself."""
        for generator in self.group.generators:
            image = 0
            for e in iter_bits(mask):
                image |= 1 << _edge_image(self.host, generator, self.host.edges[e])
            if image != mask:
                return False
        return True

    def __iter__(self) -> Iterator[FixedPoint]:
        return self.fixed_points()

    def fixed_points(self, level: Optional[int] = None) -> Iterator[FixedPoint]:
        """All fixed points in ascending orbit-set bitmask order, optionally of one level."""
        self.require_enumerable()
        return self._iterate(level)

    def _iterate(self, level: Optional[int]) -> Iterator[FixedPoint]:
        for orbit_set in range(1 << self.orbit_count):
            if level is None or popcount(orbit_set) == level:
                yield self.point(orbit_set)

    def sub_points(self, point: FixedPoint) -> Iterator[FixedPoint]:
        """Sub-points of a fixed point, ascending by orbit set."""
        for orbit_set in sorted(submasks(point.orbit_set)):
            yield self.point(orbit_set)

    def level_histogram(self) -> List[int]:
        self.require_enumerable()
        counts = Counter(popcount(s) for s in range(1 << self.orbit_count))
        return [counts[level] for level in range(self.orbit_count + 1)]

    @cached_property
    def orbit_sizes(self) -> List[int]:
        return [orbit.size for orbit in self.orbits]

    def __str__(self) -> str:
        return f"fp({self.group.name}, {self.host}) with {self.orbit_count} orbits"


@lru_cache(maxsize=128)
def lattice_for(group: GeneratedGroup, host: Graph) -> FixedPointLattice:
    """Shared lattice per (group, host)."""
    return FixedPointLattice(group, host)


def fixed_points(group: GeneratedGroup, host: Graph, level: Optional[int] = None) -> Iterator[FixedPoint]:
    return lattice_for(group, host).fixed_points(level)
