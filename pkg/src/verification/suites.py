"""
Acceptance suites run by `indsub verify`.

Each criterion takes the scale flag (False for the quick scale, True for the
full acceptance scale), checks every instance exhaustively and returns the number
of instances checked. A failed check raises FalsifiedLemmaError.
"""

import random
import time
from itertools import combinations
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from loguru import logger

from src.config.settings import settings
from src.core.errors import FalsifiedLemmaError, IndsubError, InputError
from src.enumerators.alternating import alt_enum_modp, level_vectors
from src.enumerators.naive import alt_enum_naive
from src.enumerators.duality import restrict, verify_duality
from src.enumerators.search import minimal_failing_fixed_points, scan_lattice
from src.fields.gf import FieldSpec, field_make, plus_set
from src.graphs.generators import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    random_graph,
    star_graph,
)
from src.graphs.graph import ColoredGraph, Graph
from src.graphs.operations import graph_union
from src.graphs.structure import regular_degree
from src.groups.families import (
    difference_graph,
    product_family,
    product_fixed_point,
    rotation_family,
    sylow_family,
    sylow_fixed_point,
    verify_pushdown,
)
from src.groups.group import GeneratedGroup, rotation_group, rotation_power, sylow_group
from src.groups.orbits import lattice_for
from src.models.reports import CriterionResult, VerificationSummary
from src.models.witness import CertificateKind, Verdict
from src.properties.builtins import builtin_handle, builtin_names
from src.properties.checks import is_trivial_on
from src.properties.spec import shift_property
from src.reductions.counting import (
    count_cliques,
    count_cp_hom,
    count_indsub,
    count_indsub_shifted,
    direct_oracle,
)
from src.reductions.gadget import clique_gadget
from src.reductions.identity import top_coefficient, verify_cpindsub_identity
from src.witnesses.arithmetic import prime_power_bound_holds, q_largest_prime_power
from src.witnesses.avalanche import avalanche_closure
from src.witnesses.classification import classify_k
from src.witnesses.prime_power import prime_power_witness
from src.witnesses.sylow import sylow_biclique_witness

EDGE_MONOTONE_BUILTINS = [
    "bipartite",
    "independent",
    "phi1_half",
    "phi2_3",
    "phi3_three_quarters",
    "indset3",
]

Criterion = Callable[[bool], int]

# (p, m) pairs per scale
ROTATION_SIZES = {
    False: [(3, 1), (2, 2), (5, 1), (7, 1)],
    True: [(3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1)],
}
SYLOW_SIZES = {False: [(2, 2)], True: [(2, 2), (2, 3), (3, 2)]}
PRODUCT_SIZES = {False: [(3, 1, 2)], True: [(3, 1, 2), (3, 1, 3), (5, 1, 2)]}
WITNESS_SIZES = {False: [(5, 1), (7, 1)], True: [(5, 1), (7, 1), (3, 2), (11, 1), (13, 1)]}
NAIVE_EDGES = {False: 12, True: None}
SEEDS = {False: 3, True: 20}


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise FalsifiedLemmaError(message)


def _group_instances(full: bool) -> Iterator[Tuple[str, Graph, GeneratedGroup]]:
    for p, m in ROTATION_SIZES[full]:
        spec = field_make(p, m)
        yield f"Rot_{spec.order}", complete_graph(spec.order), rotation_group(spec)
    for p, m in SYLOW_SIZES[full]:
        yield f"Syl_{p ** m}", complete_graph(p**m), sylow_group(p, m)


def engine_equivalence(full: bool) -> int:
    """Naive χ̂ mod p equals the fixed-point engine on every small enough fixed point."""
    edge_cap = NAIVE_EDGES[full] or settings.max_edges_naive
    checked = 0
    for name, host, group in _group_instances(full):
        lattice = lattice_for(group, host)
        for prop in EDGE_MONOTONE_BUILTINS:
            handle = builtin_handle(prop)
            for point in lattice.fixed_points():
                if point.edge_count > edge_cap:
                    continue
                naive = alt_enum_naive(handle, point.graph)
                residue = alt_enum_modp(handle, host, group, point)
                _check(
                    naive % group.prime == residue,
                    f"{prop} on {name} point {point.orbit_indices()}: naive {naive} vs residue {residue}",
                )
                checked += 1
    return checked


def duality_identity(full: bool) -> int:
    """ŵ ≡ C_n w (mod p) on every lattice of the engine instances."""
    checked = 0
    for name, host, group in _group_instances(full):
        n = lattice_for(group, host).orbit_count
        for prop in EDGE_MONOTONE_BUILTINS:
            w, w_hat = level_vectors(builtin_handle(prop), host, group)
            _check(verify_duality(w, w_hat, n, group.prime), f"duality fails for {prop} on {name}")
            checked += 1
    return checked


def unimodularity(full: bool) -> int:
    """det C_{n;c} = ±1."""
    top = 12 if full else 8
    checked = 0
    for n in range(top + 1):
        for c in range(n + 1):
            determinant = restrict(n, c).determinant()
            _check(determinant in (-1, 1), f"det C_{{{n};{c}}} = {determinant}")
            checked += 1
    return checked


def lattice_shape(full: bool) -> int:
    """Rot_11 on K_11 has 32 fixed points by level (1, 5, 10, 10, 5, 1), each 2|A|-regular."""
    spec = field_make(11)
    lattice = lattice_for(rotation_group(spec), complete_graph(11))
    histogram = lattice.level_histogram()
    _check(histogram == [1, 5, 10, 10, 5, 1], f"Rot_11 level histogram {histogram}")
    checked = 0
    for point in lattice.fixed_points():
        degree = regular_degree(point.graph)
        _check(degree == 2 * point.level, f"level-{point.level} point has degree {degree}")
        checked += 1
    return checked


def _lattice_graphs(group: GeneratedGroup, host: Graph) -> set:
    return {point.graph for point in lattice_for(group, host).fixed_points()}


def _check_family(family: set, group: GeneratedGroup, host: Graph, what: str) -> int:
    """The family equals the orbit unions, and each member is invariant under every generator."""
    _check(family == _lattice_graphs(group, host), f"{what} differ from the fixed points of {group.name}")
    lattice = lattice_for(group, host)
    for g in family:
        _check(lattice.is_fixed(host.edge_mask_of(g.edges)), f"{what} member {g} is moved by {group.name}")
    return len(family)


def _check_union_law(spec: FieldSpec, members: List[Tuple[Graph, list]]) -> None:
    """Unions of inhabited fixed points are the inhabited point of the pointwise unions."""
    for (c1, a1), (c2, a2) in combinations(members, 2):
        merged = [frozenset(x) | frozenset(y) for x, y in zip(a1, a2)]
        _check(
            graph_union(product_fixed_point(c1, a1, spec), product_fixed_point(c2, a2, spec))
            == product_fixed_point(graph_union(c1, c2), merged, spec),
            f"union law fails for connection graphs {c1.edges} and {c2.edges}",
        )


def fixed_point_families(full: bool) -> int:
    """Orbit unions and the closed-form families give the same set of fixed points."""
    checked = 0
    for p, m in ROTATION_SIZES[full]:
        spec = field_make(p, m)
        family = {g for _, g in rotation_family(spec)}
        checked += _check_family(
            family, rotation_group(spec), complete_graph(spec.order), "difference graphs"
        )
    for p, m in SYLOW_SIZES[full]:
        family = {sylow_fixed_point(p, m, a_list) for a_list in sylow_family(p, m)}
        checked += _check_family(
            family, sylow_group(p, m), complete_graph(p**m), "lexicographic products"
        )
    for p, m, d in PRODUCT_SIZES[full]:
        spec = field_make(p, m)
        members = list(product_family(spec, d))
        family = {product_fixed_point(c, a_lists, spec) for c, a_lists in members}
        checked += _check_family(
            family, rotation_power(spec, d), complete_graph(d * spec.order), "inhabited graphs"
        )
        _check_union_law(spec, members)
    return checked


def minimal_failing(full: bool) -> int:
    """Every minimal failing fixed point has a nonzero residue that matches the naive value."""
    edge_cap = NAIVE_EDGES[full] or settings.max_edges_naive
    checked = 0
    for name, host, group in _group_instances(full):
        for prop in EDGE_MONOTONE_BUILTINS:
            handle = builtin_handle(prop)
            scan = scan_lattice(handle, host, group)
            for found in minimal_failing_fixed_points(handle, host, group, scan=scan):
                _check(found.residue % group.prime != 0, f"zero residue on {name} for {prop}")
                if found.point.edge_count <= edge_cap:
                    naive = alt_enum_naive(handle, found.point.graph)
                    _check(
                        naive % group.prime == found.residue,
                        f"naive {naive} disagrees with residue {found.residue} on {name} for {prop}",
                    )
                checked += 1
    return checked


def avalanche(full: bool) -> int:
    """For phi2_3 over F_11, every satisfying A of size 4 passes the avalanche closure."""
    handle = builtin_handle("phi2_3")
    cases: List[Tuple[FieldSpec, int]] = [(field_make(11), 4)]
    if full:
        cases.append((field_make(13), 5))
    checked = 0
    for spec, size in cases:
        for a in combinations(plus_set(spec), size):
            if not handle.evaluate(difference_graph(spec, a)):
                continue
            report = avalanche_closure(handle, spec, a)
            _check(report.passed and len(report.embeddings) == report.checked_sets, f"avalanche over {spec}")
            checked += 1
    return checked


def _nontrivial_monotone(k: int) -> Iterator[str]:
    for prop in EDGE_MONOTONE_BUILTINS:
        if not is_trivial_on(builtin_handle(prop), k):
            yield prop


def prime_power_witness_suite(full: bool) -> int:
    """Win-win witnesses reach level floor(sqrt(|F^+|)) with checked regularity."""
    checked = 0
    for p, m in WITNESS_SIZES[full]:
        spec = field_make(p, m)
        d = int(len(plus_set(spec)) ** 0.5)
        for prop in _nontrivial_monotone(spec.order):
            report = prime_power_witness(builtin_handle(prop), p, m, verify=full)
            _check(report.level >= d, f"{prop} on F_{spec.order}: level {report.level} < {d}")
            _check(
                report.certificate.kind is CertificateKind.REGULAR_DEGREE and report.certificate.checked,
                f"{prop} on F_{spec.order}: unchecked certificate",
            )
            if report.exact_treewidth is not None:
                _check(report.exact_treewidth >= report.level, f"{prop} on F_{spec.order}: treewidth below level")
            checked += 1
    return checked


def sylow_biclique_witness_suite(full: bool) -> int:
    """Sylow witnesses have empty prefix 0 and contain K_{p^(m-1), p^(m-1)}."""
    checked = 0
    for p, m in SYLOW_SIZES[full]:
        _check(verify_pushdown(p, m), f"forward revolution does not embed pushed-down points for {p}^{m}")
        for prop in _nontrivial_monotone(p**m):
            report = sylow_biclique_witness(builtin_handle(prop), p, m, check_pushdown=True)
            _check(report.parameters["empty_prefix"] == 0, f"{prop} on Syl_{p ** m}: nonzero empty prefix")
            _check(report.residue % p != 0, f"{prop} on Syl_{p ** m}: zero residue")
            _check(
                report.certificate.kind is CertificateKind.BICLIQUE and report.certificate.value == p ** (m - 1),
                f"{prop} on Syl_{p ** m}: wrong biclique certificate",
            )
            checked += 1
    return checked


def inclusion_exclusion(full: bool) -> int:
    """The shifted count from oracle calls equals the direct count of (Φ - H)."""
    shifts = [empty_graph(1), complete_graph(2), path_graph(3)]
    ks = [1, 2, 3] if full else [1, 2]
    props = builtin_names() if full else EDGE_MONOTONE_BUILTINS[:3] + ["connected"]
    checked = 0
    for seed in range(SEEDS[full]):
        rng = random.Random(seed)
        g = random_graph(rng.randint(3, 7), 0.5, rng)
        for prop in props:
            handle = builtin_handle(prop)
            for h in shifts:
                for k in ks:
                    parameters: List[int] = []

                    def recording_oracle(inner, parameter, instance):
                        parameters.append(parameter)
                        return direct_oracle(inner, parameter, instance)

                    reduced = count_indsub_shifted(handle, h, k, g, oracle=recording_oracle)
                    direct = count_indsub(shift_property(handle.spec, h), k, g)
                    _check(reduced.value == direct.value, f"{prop}, H={h}, k={k}: {reduced.value} != {direct.value}")
                    _check(
                        len(parameters) == 1 << h.n and set(parameters) == {k + h.n},
                        f"oracle parameters {parameters} for k={k}, |V(H)|={h.n}",
                    )
                    checked += 1
    return checked


def clique_gadget_suite(full: bool) -> int:
    """#cpHom over the gadget equals the clique count, and the vertex-count law holds."""
    cases = [
        (complete_bipartite_graph(2, 2), 2),
        (complete_graph(4), 2),
        (complete_bipartite_graph(3, 3), 2),
        (complete_bipartite_graph(3, 3), 3),
    ]
    max_n = 8 if full else 6
    checked = 0
    for seed in range(SEEDS[full]):
        rng = random.Random(seed)
        g = random_graph(rng.randint(1, max_n), 0.6, rng)
        for f, ell in cases:
            gadget = clique_gadget(f, ell, g)
            _check(gadget.g.n == 2 * ell * g.n + f.n - 2 * ell, f"gadget vertex count {gadget.g.n}")
            cp_hom = count_cp_hom(gadget).value
            cliques = count_cliques(g, ell).value
            _check(cp_hom == cliques, f"gadget #cpHom {cp_hom} != {cliques} cliques of size {ell}")
            checked += 1
    return checked


def random_colored_graph(pattern: Graph, rng: random.Random, max_class: int = 3, edge_probability: float = 0.5) -> ColoredGraph:
    """Random colored graph: class sizes 1..max_class, edges only between adjacent colors."""
    coloring: List[int] = []
    for color in range(pattern.n):
        coloring.extend([color] * rng.randint(1, max_class))
    edges = [
        (u, v)
        for u, v in combinations(range(len(coloring)), 2)
        if pattern.has_edge(coloring[u], coloring[v]) and rng.random() < edge_probability
    ]
    return ColoredGraph(Graph(len(coloring), tuple(edges)), pattern, tuple(coloring))


def cp_indsub_identity(full: bool) -> int:
    """Both sides of the cp-IndSub identity agree; the top coefficient matches |χ̂|."""
    patterns = [complete_graph(2), path_graph(3), complete_graph(3), star_graph(3), cycle_graph(4), complete_graph(4)]
    props = builtin_names() if full else ["always_true", "bipartite", "independent", "connected"]
    checked = 0
    for pattern in patterns:
        for prop in props:
            handle = builtin_handle(prop)
            top = top_coefficient(handle, pattern)
            _check(abs(top) == abs(alt_enum_naive(handle, pattern)), f"top coefficient of {pattern} for {prop}")
            for seed in range(SEEDS[full]):
                cg = random_colored_graph(pattern, random.Random(seed))
                _check(verify_cpindsub_identity(handle, pattern, cg), f"identity fails for {prop} on {pattern}")
                checked += 1
    return checked


def _largest_prime_power_by_trial_division(n: int) -> int:
    best = 1
    rest = n
    factor = 2
    while factor * factor <= rest:
        power = 1
        while rest % factor == 0:
            rest //= factor
            power *= factor
        best = max(best, power)
        factor += 1
    return max(best, rest)


def prime_power_divisor(full: bool) -> int:
    """q(n) against trial division, and n <= q(n)^q(n)."""
    limit = 10**6 if full else 10**4
    bound_limit = 10**4 if full else 10**3
    for n in range(1, limit + 1):
        expected = _largest_prime_power_by_trial_division(n)
        actual = q_largest_prime_power(n)
        _check(actual == expected, f"q({n}) = {actual}, trial division gives {expected}")
    for n in range(1, bound_limit + 1):
        _check(prime_power_bound_holds(n), f"{n} > q(n)^q(n)")
    return limit + bound_limit


def classification(full: bool) -> int:
    """classify_k gives a verdict for every edge-monotone built-in; scattered shifts are nontrivial."""
    ks = [6, 10, 12] if full else [6]
    checked = 0
    for k in ks:
        for prop in EDGE_MONOTONE_BUILTINS:
            result = classify_k(builtin_handle(prop), k)
            if result.verdict is Verdict.SCATTERED:
                _check(
                    not is_trivial_on(result.shifted, result.q, method="general"),
                    f"{prop} at k={k}: (Φ - H) is trivial on {result.q}",
                )
            checked += 1
    return checked


CRITERIA: Dict[str, Criterion] = {
    "engine_equivalence": engine_equivalence,
    "duality_identity": duality_identity,
    "unimodularity": unimodularity,
    "lattice_shape": lattice_shape,
    "fixed_point_families": fixed_point_families,
    "minimal_failing": minimal_failing,
    "avalanche": avalanche,
    "prime_power_witness": prime_power_witness_suite,
    "sylow_biclique_witness": sylow_biclique_witness_suite,
    "inclusion_exclusion": inclusion_exclusion,
    "clique_gadget": clique_gadget_suite,
    "cp_indsub_identity": cp_indsub_identity,
    "prime_power_divisor": prime_power_divisor,
    "classification": classification,
}


def run_criterion(name: str, full: bool = False) -> CriterionResult:
    """Run one criterion; domain errors and falsified checks become a failed result."""
    criterion = CRITERIA[name]
    started = time.perf_counter()
    try:
        instances = criterion(full)
    except IndsubError as e:
        logger.error(f"Criterion {name} failed: {e}")
        return CriterionResult(name=name, passed=False, detail=str(e), seconds=time.perf_counter() - started)
    seconds = time.perf_counter() - started
    logger.info(f"Criterion {name} passed on {instances} instances in {seconds:.2f}s")
    return CriterionResult(name=name, passed=True, instances=instances, seconds=seconds)


def run_suites(names: Optional[Iterable[str]] = None, full: bool = False) -> VerificationSummary:
    """
    Run the named criteria (all of them by default) at the quick or full scale.

    Raises:
        InputError: an unknown criterion name
    """
    selected = list(names) if names else list(CRITERIA)
    unknown = [name for name in selected if name not in CRITERIA]
    if unknown:
        raise InputError(f"unknown criteria {', '.join(unknown)}; choose from {', '.join(CRITERIA)}")
    summary = VerificationSummary(scale="full" if full else "quick")
    for name in selected:
        summary.results.append(run_criterion(name, full))
    return summary
