"""
Prime-power witness: a nonvanishing fixed point of Rot_{p^m} on K_{p^m} with a
level of about |F^+|^{1/2}.

Win-win: if some point at level >= |F^+| - d satisfies Φ, the avalanche
argument pushes the minimal failing level to at least d; otherwise the duality
search applies with c = d.
"""

from math import isqrt

from loguru import logger

from src.core.errors import FalsifiedLemmaError, HypothesisError
from src.enumerators.search import duality_witness, minimal_failing_fixed_points, scan_lattice
from src.fields.gf import field_make, format_subset, plus_set
from src.graphs.generators import complete_graph
from src.groups.families import difference_set_of
from src.groups.group import rotation_group
from src.models.witness import WitnessKind, WitnessReport
from src.properties.checks import PropertyLike, as_handle, is_trivial_on
from src.utils.bits import popcount
from src.witnesses.reporting import build_report, regular_certificate


def prime_power_witness(prop: PropertyLike, p: int, m: int = 1, verify: bool = False) -> WitnessReport:
    """
    Find a fixed point C^A of Rot_{p^m} with nonzero residue mod p and |A| >= d,
    where d = floor(sqrt(|F^+|)). The certificate is the regular degree of C^A.

    Raises:
        HypothesisError: Φ is not verified edge-monotone, or is trivial on p^m
        FalsifiedLemmaError: the search finds nothing although the hypotheses hold
    """
    handle = as_handle(prop)
    handle.require_edge_monotone()
    spec = field_make(p, m)
    if is_trivial_on(handle, spec.order):
        raise HypothesisError(f"property {handle} is trivial on {spec.order} vertices")

    host = complete_graph(spec.order)
    group = rotation_group(spec)
    group.require_p_group()
    scan = scan_lattice(handle, host, group)
    plus_size = len(plus_set(spec))
    d = isqrt(plus_size)
    high = plus_size - d

    high_point = next(
        (s for s in range(scan.size) if popcount(s) >= high and scan.phi[s]),
        None,
    )
    if high_point is not None:
        logger.info(f"Level-{popcount(high_point)} point satisfies Φ; searching minimal failing points above {d}")
        candidates = [
            found
            for found in minimal_failing_fixed_points(handle, host, group, scan=scan)
            if found.level >= d
        ]
        if not candidates:
            raise FalsifiedLemmaError(
                f"no minimal failing point of level >= {d} over {spec} although a high point satisfies Φ"
            )
        found = candidates[0]
        kind = WitnessKind.AVALANCHE_MINIMAL
    else:
        logger.info(f"No point at level >= {high} satisfies Φ; using the duality search with c = {d}")
        found = duality_witness(handle, host, group, d, scan=scan)
        kind = WitnessKind.DUALITY

    a = difference_set_of(spec, found.point.graph)
    expected_degree = len(a) if p == 2 else 2 * len(a)
    return build_report(
        kind,
        handle,
        found.point,
        found.residue,
        p,
        group.name,
        regular_certificate(found.point, expected_degree),
        {"p": p, "m": m, "d": d, "a": format_subset(a)},
        verify=verify,
    )
