"""
Searches for nonvanishing fixed points: minimal failing points and duality witnesses.

Ties are broken by ascending level, then by smallest orbit-set bitmask.
"""

from dataclasses import dataclass
from typing import List, Optional

from loguru import logger

from src.core.errors import FalsifiedLemmaError, HypothesisError, InputError
from src.enumerators.alternating import LatticeScan
from src.graphs.graph import Graph
from src.groups.group import GeneratedGroup
from src.groups.orbits import FixedPoint, lattice_for
from src.properties.checks import PropertyLike
from src.utils.bits import iter_bits, popcount


@dataclass(frozen=True)
class NonvanishingPoint:
    """A fixed point whose alternating enumerator is nonzero mod p."""

    point: FixedPoint
    residue: int
    p: int

    @property
    def level(self) -> int:
        return self.point.level


def scan_lattice(prop: PropertyLike, host: Graph, group: GeneratedGroup) -> LatticeScan:
    return LatticeScan(prop, lattice_for(group, host))


def minimal_failing_orbit_sets(scan: LatticeScan) -> List[int]:
    """
    Orbit sets S with Φ(S) = 0 while every proper sub-point satisfies Φ, sorted by
    level and then by bitmask.
    """
    size = scan.size
    # downward[S]: Φ holds on S and on every sub-point of S
    downward = bytearray(size)
    failing = []
    for orbit_set in range(size):
        children_hold = all(downward[orbit_set ^ (1 << i)] for i in iter_bits(orbit_set))
        if scan.phi[orbit_set]:
            downward[orbit_set] = children_hold
        elif children_hold:
            failing.append(orbit_set)
    failing.sort(key=lambda s: (popcount(s), s))
    return failing


def minimal_failing_fixed_points(
    prop: PropertyLike,
    host: Graph,
    group: GeneratedGroup,
    scan: Optional[LatticeScan] = None,
) -> List[NonvanishingPoint]:
    """
    All fixed points F with Φ(F) = 0 whose proper sub-points all satisfy Φ.

    Each carries its mod-p residue, which is (-1)^{level+1}. Returns [] when Φ
    fails on the level-0 point or holds on every fixed point.

    Raises:
        FalsifiedLemmaError: a minimal failing point has residue 0
    """
    scan = scan or scan_lattice(prop, host, group)
    if not scan.phi[0]:
        logger.info("Φ fails on the empty fixed point; no minimal failing points")
        return []
    results = []
    for orbit_set in minimal_failing_orbit_sets(scan):
        residue = scan.residue(orbit_set)
        if residue == 0:
            raise FalsifiedLemmaError(
                f"minimal failing fixed point {orbit_set:#x} of {scan.lattice} has residue 0 mod {scan.p}"
            )
        results.append(NonvanishingPoint(scan.point(orbit_set), residue, scan.p))
    return results


def check_duality_hypothesis(scan: LatticeScan, c: int) -> Optional[str]:
    """None when Φ(IS) = 1 and Φ fails on every point above level ℓ(H) - c, else a reason."""
    top = scan.lattice.top_level
    if not 0 <= c <= top:
        raise InputError(f"level bound c={c} outside 0..{top}")
    if not scan.phi[0]:
        return "Φ fails on the empty fixed point"
    for orbit_set in range(scan.size):
        if popcount(orbit_set) > top - c and scan.phi[orbit_set]:
            return f"Φ holds on the level-{popcount(orbit_set)} fixed point {orbit_set:#x} above level {top - c}"
    return None


def duality_witness(
    prop: PropertyLike,
    host: Graph,
    group: GeneratedGroup,
    c: int,
    scan: Optional[LatticeScan] = None,
) -> NonvanishingPoint:
    """
    A fixed point of level at least c with nonzero residue, smallest orbit-set
    bitmask among the candidates.

    Raises:
        HypothesisError: Φ(IS) = 0, or Φ holds on some point above level ℓ(H) - c
        FalsifiedLemmaError: the hypothesis holds but no witness exists
    """
    scan = scan or scan_lattice(prop, host, group)
    reason = check_duality_hypothesis(scan, c)
    if reason is not None:
        raise HypothesisError(f"duality witness hypothesis violated: {reason}")
    for orbit_set in range(scan.size):
        if popcount(orbit_set) >= c and scan.chi[orbit_set]:
            return NonvanishingPoint(scan.point(orbit_set), scan.chi[orbit_set], scan.p)
    raise FalsifiedLemmaError(
        f"no fixed point of level >= {c} with nonzero residue in {scan.lattice} although the hypothesis holds"
    )
