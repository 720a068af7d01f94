"""
Trivial / concentrated / scattered classification at a vertex count k, and the
per-k scattered probe.

With q = q(k) and d = k / q, the fixed points of Rot^d_q on K_k are inhabited
graphs C[C^{A_1}, ..., C^{A_d}]. A minimal failing point whose connection graph C
has an edge contains K_{q,q} (concentrated); otherwise C is empty and the other
blocks form the graph H of the shifted property (Φ - H) (scattered).
"""

from dataclasses import dataclass
from typing import Optional

from loguru import logger

from src.core.errors import CapacityError, FalsifiedLemmaError, ensure_capacity
from src.enumerators.search import minimal_failing_orbit_sets, scan_lattice
from src.fields.gf import field_make, format_subset
from src.graphs.generators import all_graphs, complete_graph
from src.graphs.graph import Graph
from src.graphs.operations import disjoint_union
from src.groups.families import difference_graph, product_biclique_sides, product_decomposition
from src.groups.group import rotation_power
from src.models.witness import KClassification, ScatteredProbeReport, Verdict, WitnessKind
from src.properties.checks import PropertyLike, as_handle, is_trivial_on
from src.properties.spec import PropertySpec, shift_property
from src.utils.bits import popcount
from src.witnesses.arithmetic import prime_power_parts, q_largest_prime_power
from src.witnesses.reporting import biclique_certificate, build_report

MAX_K = 12
MAX_Q = 5
MAX_BLOCKS = 3
MAX_PROBE_H_VERTICES = 4


def classify_k(prop: PropertyLike, k: int, verify: bool = False) -> KClassification:
    """
    Decide whether Φ is trivial, concentrated or scattered on k vertices.

    Raises:
        HypothesisError: Φ is not verified edge-monotone
        CapacityError: k > 12, q(k) > 5 or k / q(k) > 3
        FalsifiedLemmaError: a derived claim fails its check
    """
    handle = as_handle(prop)
    handle.require_edge_monotone()
    ensure_capacity(k, MAX_K, "classification vertex count k")
    q = q_largest_prime_power(k)
    d = k // q
    if is_trivial_on(handle, k):
        return KClassification(k=k, q=q, d=d, verdict=Verdict.TRIVIAL)
    if q > MAX_Q or d > MAX_BLOCKS:
        raise CapacityError(f"classification at k={k} needs q(k)={q} <= {MAX_Q} and k/q(k)={d} <= {MAX_BLOCKS}")

    p, m = prime_power_parts(q)
    spec = field_make(p, m)
    host = complete_graph(k)
    group = rotation_power(spec, d)
    scan = scan_lattice(handle, host, group)
    failing = minimal_failing_orbit_sets(scan)
    if not failing:
        raise FalsifiedLemmaError(f"no failing fixed point of {group.name} although Φ is nontrivial on {k}")
    level = popcount(failing[0])
    same_level = [s for s in failing if popcount(s) == level]
    decompositions = {s: product_decomposition(spec, d, scan.point(s).graph) for s in same_level}

    concentrated = [s for s in same_level if decompositions[s][0].m > 0]
    if concentrated:
        orbit_set = concentrated[0]
        c, a_lists = decompositions[orbit_set]
        point = scan.point(orbit_set)
        report = build_report(
            WitnessKind.CONCENTRATED,
            handle,
            point,
            scan.residue(orbit_set),
            p,
            group.name,
            biclique_certificate(point, q, product_biclique_sides(spec, c)),
            {
                "k": k,
                "q": q,
                "d": d,
                "connection_edges": [list(edge) for edge in c.edges],
                "a_lists": [format_subset(a) for a in a_lists],
            },
            verify=verify,
        )
        logger.info(f"Φ is concentrated on k={k}: failing level {level}")
        return KClassification(k=k, q=q, d=d, verdict=Verdict.CONCENTRATED, failing_level=level, report=report)

    orbit_set = same_level[0]
    _, a_lists = decompositions[orbit_set]
    x = next(i for i, a in enumerate(a_lists) if a)
    others = [difference_graph(spec, a) for i, a in enumerate(a_lists) if i != x]
    h = disjoint_union(*others)
    shifted = shift_property(handle.spec, h)
    nontrivial = not is_trivial_on(shifted, q, method="general")
    if not nontrivial:
        raise FalsifiedLemmaError(f"(Φ - H) is trivial on {q} vertices for a scattered split at k={k}")
    logger.info(f"Φ is scattered on k={k}: H has {h.n} vertices and {h.m} edges")
    result = KClassification(
        k=k,
        q=q,
        d=d,
        verdict=Verdict.SCATTERED,
        failing_level=level,
        h_vertices=h.n,
        h_edges=[list(edge) for edge in h.edges],
        shifted_property=str(shifted),
        shifted_nontrivial=nontrivial,
    )
    result._h_graph = h
    result._shifted = shifted
    return result


def graphs_in_lexicographic_order(n: int):
    """All labeled graphs on n vertices, ordered by their sorted edge lists."""
    return sorted(all_graphs(n), key=lambda g: g.edges)


@dataclass(frozen=True)
class ScatteredProbe:
    """
    The per-k scattered property: (Φ - H_m) on m = q(k) vertices, false on any
    other vertex count.
    """

    k: int
    m: int
    h: Graph
    shifted: PropertySpec

    def evaluate(self, g: Graph) -> bool:
        return g.n == self.m and self.shifted.holds(g)

    def to_report(self) -> ScatteredProbeReport:
        return ScatteredProbeReport(
            k=self.k,
            m=self.m,
            h_vertices=self.h.n,
            h_edges=[list(edge) for edge in self.h.edges],
            shifted_property=str(self.shifted),
        )


def scattered_property_probe(prop: PropertyLike, k: int) -> Optional[ScatteredProbe]:
    """
    For a property scattered on k, the lexicographically first H_m on k - m
    vertices (m = q(k)) whose shift (Φ - H_m) is nontrivial on m. None when Φ is
    not scattered on k.

    Raises:
        CapacityError: H_m would have more than 4 vertices
    """
    handle = as_handle(prop)
    classification = classify_k(handle, k)
    if classification.verdict is not Verdict.SCATTERED:
        return None
    m = classification.q
    ensure_capacity(k - m, MAX_PROBE_H_VERTICES, "scattered probe H vertex count")
    for h in graphs_in_lexicographic_order(k - m):
        shifted = shift_property(handle.spec, h)
        if not is_trivial_on(shifted, m, method="general"):
            logger.debug(f"Scattered probe at k={k}: H_m = {h}")
            return ScatteredProbe(k, m, h, shifted)
    raise FalsifiedLemmaError(f"no H on {k - m} vertices makes (Φ - H) nontrivial on {m}")
