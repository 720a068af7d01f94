"""
Alternating enumerator engines.

The naive engine (see naive.py) sums Φ(H[S]) (-1)^{|S|} over all edge subsets S
of H exactly. The mod-p engine sums Φ(B) (-1)^{level(B)} over the sub-points B of
a fixed point of a p-group, which agrees with the naive value modulo p.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from loguru import logger

from src.core.errors import InputError
from src.graphs.graph import Graph
from src.groups.group import GeneratedGroup
from src.groups.orbits import FixedPoint, FixedPointLattice, lattice_for
from src.properties.checks import PropertyLike, as_handle
from src.utils.bits import parity_sign, popcount


def _lattice(group: GeneratedGroup, host: Graph) -> FixedPointLattice:
    if group.prime is None:
        raise InputError(f"{group.name} is not a p-group, so no residue modulus is defined")
    return lattice_for(group, host)


def _resolve_target(lattice: FixedPointLattice, target: Union[FixedPoint, Graph, int]) -> FixedPoint:
    if isinstance(target, FixedPoint):
        if target.host != lattice.host:
            raise InputError("fixed point belongs to another host graph")
        return lattice.from_edge_mask(target.edges)
    if isinstance(target, Graph):
        return lattice.from_graph(target)
    return lattice.from_edge_mask(target)


def alt_enum_modp(
    prop: PropertyLike,
    host: Graph,
    group: GeneratedGroup,
    target: Union[FixedPoint, Graph, int],
) -> int:
    """
    Σ over sub-points B of target of Φ(B) (-1)^{level(B)}, reduced mod p.

    Args:
        target: a fixed point, a graph on the host's vertices, or an edge mask

    Raises:
        InputError: target is not a fixed point, or the group has no asserted prime
    """
    lattice = _lattice(group, host)
    point = _resolve_target(lattice, target)
    handle = as_handle(prop)
    p = group.prime
    total = 0
    for sub in lattice.sub_points(point):
        if handle.evaluate_subgraph(host, sub.edges):
            total += parity_sign(sub.orbit_set)
    return total % p


class LatticeScan:
    """
    Φ and the mod-p alternating enumerator on every point of a lattice at once.

    phi[S] is Φ of the point with orbit set S; chi[S] is its residue, computed
    by a zeta transform over orbit subsets.
    """

    def __init__(self, prop: PropertyLike, lattice: FixedPointLattice, p: Optional[int] = None):
        lattice.require_enumerable()
        self.lattice = lattice
        self.handle = as_handle(prop)
        self.p = p if p is not None else lattice.group.prime
        if self.p is None:
            raise InputError(f"{lattice.group.name} is not a p-group; pass a prime explicitly")
        size = 1 << lattice.orbit_count
        host = lattice.host
        self.phi = bytearray(size)
        for orbit_set in range(size):
            self.phi[orbit_set] = self.handle.evaluate_subgraph(host, lattice.edges_of(orbit_set))
        self.chi = self._zeta()
        logger.debug(f"Scanned {size} fixed points of {lattice}")

    def _zeta(self) -> List[int]:
        p = self.p
        values = [parity_sign(s) * v % p for s, v in enumerate(self.phi)]
        for i in range(self.lattice.orbit_count):
            bit = 1 << i
            for s in range(len(values)):
                if s & bit:
                    values[s] = (values[s] + values[s ^ bit]) % p
        return values

    @property
    def size(self) -> int:
        return len(self.phi)

    def holds(self, orbit_set: int) -> bool:
        return bool(self.phi[orbit_set])

    def residue(self, orbit_set: int) -> int:
        return self.chi[orbit_set]

    def point(self, orbit_set: int) -> FixedPoint:
        return self.lattice.point(orbit_set)


@dataclass(frozen=True)
class LevelVector:
    """Residues mod p indexed by level 0..ℓ(H)."""

    p: int
    entries: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, level: int) -> int:
        return self.entries[level]


def level_vectors(
    prop: PropertyLike,
    host: Graph,
    group: GeneratedGroup,
    p: Optional[int] = None,
    engine: str = "scan",
) -> Tuple[LevelVector, LevelVector]:
    """
    w_i = Σ_{level(A)=i} Φ(A) mod p and ŵ_i = Σ_{level(A)=i} χ̂(Φ, A) mod p.

    engine "scan" uses the zeta transform; "reference" calls alt_enum_modp per point.
    """
    lattice = lattice_for(group, host)
    scan = LatticeScan(prop, lattice, p)
    modulus = scan.p
    w = [0] * (lattice.orbit_count + 1)
    w_hat = [0] * (lattice.orbit_count + 1)
    for orbit_set in range(scan.size):
        level = popcount(orbit_set)
        w[level] += scan.phi[orbit_set]
        if engine == "scan":
            w_hat[level] += scan.chi[orbit_set]
        elif engine == "reference":
            w_hat[level] += alt_enum_modp(scan.handle, host, group, lattice.point(orbit_set))
        else:
            raise InputError(f"unknown engine {engine!r}")
    return (
        LevelVector(modulus, tuple(v % modulus for v in w)),
        LevelVector(modulus, tuple(v % modulus for v in w_hat)),
    )
