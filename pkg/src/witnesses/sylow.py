"""
Sylow biclique witness: a nonvanishing fixed point of Syl_{p^m} on K_{p^m} that
contains K_{p^(m-1), p^(m-1)}.
"""

from typing import Dict, List

from loguru import logger

from src.core.errors import FalsifiedLemmaError, HypothesisError, InputError
from src.enumerators.alternating import LatticeScan
from src.enumerators.search import scan_lattice
from src.fields.gf import format_subset
from src.graphs.generators import complete_graph
from src.groups.families import empty_prefix, sylow_biclique_sides, sylow_decomposition
from src.groups.group import sylow_group
from src.models.witness import WitnessKind, WitnessReport
from src.properties.checks import PropertyLike, as_handle, is_trivial_on
from src.utils.bits import popcount
from src.witnesses.reporting import biclique_certificate, build_report


def _prefixes(scan: LatticeScan, p: int, m: int) -> Dict[int, int]:
    """Empty prefix of every nonempty Sylow fixed point, by orbit set."""
    prefixes = {}
    for orbit_set in range(1, scan.size):
        a_list = sylow_decomposition(p, m, scan.point(orbit_set).graph)
        prefixes[orbit_set] = empty_prefix(a_list)
    return prefixes


def check_pushdown_soundness(scan: LatticeScan, prefixes: Dict[int, int]) -> None:
    """
    At every level, if some point fails Φ then some point with empty prefix 0
    fails Φ.

    Raises:
        FalsifiedLemmaError: a level where only points with a nonzero empty prefix fail
    """
    failing_by_level: Dict[int, List[int]] = {}
    for orbit_set, prefix in prefixes.items():
        if not scan.phi[orbit_set]:
            failing_by_level.setdefault(popcount(orbit_set), []).append(prefix)
    for level, failing_prefixes in sorted(failing_by_level.items()):
        if 0 not in failing_prefixes:
            raise FalsifiedLemmaError(
                f"level-{level} Sylow points fail Φ only with a nonzero empty prefix"
            )
    logger.debug(f"Pushdown soundness holds on {len(failing_by_level)} failing levels")


def sylow_biclique_witness(
    prop: PropertyLike,
    p: int,
    m: int,
    verify: bool = False,
    check_pushdown: bool = False,
) -> WitnessReport:
    """
    At the smallest level i where some Sylow fixed point fails Φ, return the
    failing point with empty prefix 0 and smallest orbit-set bitmask. It contains
    K_{a,a} with a = p^(m-1).

    Raises:
        InputError: m < 2
        HypothesisError: Φ is not verified edge-monotone, or is trivial on p^m
        FalsifiedLemmaError: no level-i failing point has empty prefix 0
    """
    if m < 2:
        raise InputError(f"the Sylow biclique witness needs m >= 2, got {m}")
    handle = as_handle(prop)
    handle.require_edge_monotone()
    if is_trivial_on(handle, p**m):
        raise HypothesisError(f"property {handle} is trivial on {p**m} vertices")

    host = complete_graph(p**m)
    group = sylow_group(p, m)
    scan = scan_lattice(handle, host, group)
    prefixes = _prefixes(scan, p, m)
    if check_pushdown:
        check_pushdown_soundness(scan, prefixes)

    failing = [s for s in range(scan.size) if not scan.phi[s]]
    if not failing:
        raise FalsifiedLemmaError(f"Φ holds on every Sylow fixed point of K_{p**m} although it is nontrivial")
    level = min(popcount(s) for s in failing)
    candidates = [s for s in failing if popcount(s) == level and prefixes.get(s) == 0]
    if not candidates:
        raise FalsifiedLemmaError(f"no level-{level} failing Sylow point has empty prefix 0")
    orbit_set = candidates[0]
    point = scan.point(orbit_set)
    a_list = sylow_decomposition(p, m, point.graph)
    a = p ** (m - 1)
    logger.info(f"Sylow witness at level {level}: {[format_subset(x) for x in a_list]}")
    return build_report(
        WitnessKind.SYLOW_BICLIQUE,
        handle,
        point,
        scan.residue(orbit_set),
        p,
        group.name,
        biclique_certificate(point, a, sylow_biclique_sides(p, m, a_list)),
        {
            "p": p,
            "m": m,
            "a_list": [format_subset(x) for x in a_list],
            "empty_prefix": empty_prefix(a_list),
        },
        verify=verify,
    )
