"""
Brute-force reference counters: #IndSub, the inclusion-exclusion shifted count,
#Hom, #cpHom, #cpIndSub and clique counting.

All counts are exact Python integers wrapped in CountResult.
"""

from itertools import combinations, product
from math import comb
from typing import Callable, List, Sequence, Union

from loguru import logger

from src.config.settings import settings
from src.core.errors import InputError, ensure_capacity
from src.graphs.graph import ColoredGraph, Graph
from src.graphs.operations import disjoint_union, induced_subgraph
from src.models.reports import CountMethod, CountResult
from src.properties.checks import PropertyLike, as_handle
from src.properties.handle import PropertyHandle
from src.utils.bits import iter_bits, parity_sign, popcount

MAX_HOM_PATTERN_N = 5
MAX_HOM_HOST_N = 12
MAX_SHIFT_N = 4

# oracle(handle, k, g) -> #IndSub(Φ, k)(g)
CountingOracle = Callable[[PropertyHandle, int, Graph], Union[CountResult, int]]


def _value(result: Union[CountResult, int]) -> int:
    return result.value if isinstance(result, CountResult) else int(result)


def count_indsub(prop: PropertyLike, k: int, g: Graph) -> CountResult:
    """
    Number of k-vertex subsets X of V(g) with Φ(g[X]).

    Raises:
        CapacityError: binom(|V(g)|, k) exceeds settings.max_subsets
    """
    if k < 0:
        raise InputError(f"subset size must be nonnegative, got {k}")
    ensure_capacity(comb(g.n, k), settings.max_subsets, "k-subset count")
    handle = as_handle(prop)
    total = sum(1 for subset in combinations(range(g.n), k) if handle.evaluate(induced_subgraph(g, subset)))
    return CountResult(value=total, method=CountMethod.DIRECT)


def direct_oracle(handle: PropertyHandle, k: int, g: Graph) -> CountResult:
    """The direct counter, in oracle form."""
    return count_indsub(handle, k, g)


def count_indsub_shifted(
    prop: PropertyLike,
    hgraph: Graph,
    k: int,
    g: Graph,
    oracle: CountingOracle = direct_oracle,
) -> CountResult:
    """
    #IndSub((Φ - H), k)(G) from 2^|V(H)| oracle calls for Φ.

    Σ over X ⊆ V(H) of (-1)^|X| #IndSub(Φ, k + |V(H)|)(G ⊎ (H - X)): the
    alternating sum keeps exactly the subsets that contain every vertex of H.
    Every oracle call uses the parameter k + |V(H)|.

    Raises:
        CapacityError: H has more than 4 vertices
    """
    ensure_capacity(hgraph.n, MAX_SHIFT_N, "shift graph vertex count")
    handle = as_handle(prop)
    parameter = k + hgraph.n
    total = 0
    for removed in range(1 << hgraph.n):
        kept = [v for v in range(hgraph.n) if not removed >> v & 1]
        instance = disjoint_union(g, induced_subgraph(hgraph, kept))
        value = _value(oracle(handle, parameter, instance))
        total += parity_sign(removed) * value
    logger.debug(f"Shifted count by {1 << hgraph.n} oracle calls with parameter {parameter}: {total}")
    if total < 0:
        raise InputError(f"oracle answers produce a negative count {total}")
    return CountResult(value=total, method=CountMethod.REDUCTION)


def count_hom(hpat: Graph, g: Graph) -> CountResult:
    """
    Number of maps V(hpat) -> V(g) sending edges to edges.

    Raises:
        CapacityError: hpat has more than 5 vertices or g more than 12
    """
    ensure_capacity(hpat.n, MAX_HOM_PATTERN_N, "homomorphism pattern vertex count")
    ensure_capacity(g.n, MAX_HOM_HOST_N, "homomorphism host vertex count")
    classes = [g.all_vertices] * hpat.n
    return CountResult(value=count_prescribed_hom(hpat, g, classes))


def count_prescribed_hom(pattern: Graph, g: Graph, classes: Sequence[int], edge_mask: int = -1) -> int:
    """
    Homomorphisms from pattern (restricted to the edges in edge_mask) into g that
    send pattern vertex i into the vertex set classes[i].

    Pattern vertices are placed in ascending order; the candidates for vertex i are
    its class intersected with the neighborhoods of its already placed neighbors.
    """
    earlier: List[List[int]] = [[] for _ in range(pattern.n)]
    for index, (u, v) in enumerate(pattern.edges):
        if edge_mask >> index & 1:
            earlier[v].append(u)
    if pattern.n == 0:
        return 1
    image = [0] * pattern.n
    last = pattern.n - 1

    def extend(i: int) -> int:
        candidates = classes[i]
        for j in earlier[i]:
            candidates &= g.adjacency[image[j]]
        if i == last:
            return popcount(candidates)
        total = 0
        for v in iter_bits(candidates):
            image[i] = v
            total += extend(i + 1)
        return total

    return extend(0)


def count_cp_hom(cg: ColoredGraph) -> CountResult:
    """
    Color-prescribed homomorphisms: maps h from the pattern into cg.g with
    c(h(v)) = v for every pattern vertex v.

    Raises:
        CapacityError: the product of the color-class sizes exceeds settings.max_subsets
    """
    ensure_capacity(cg.transversal_count(), settings.max_subsets, "transversal count")
    return CountResult(value=count_prescribed_hom(cg.pattern, cg.g, cg.class_masks))


def transversal_graph(g: Graph, transversal: Sequence[int]) -> Graph:
    """Induced graph on one vertex per color; vertex i is the one of color i."""
    edges = [
        (i, j)
        for i, j in combinations(range(len(transversal)), 2)
        if g.has_edge(transversal[i], transversal[j])
    ]
    return Graph(len(transversal), tuple(edges))


def count_cp_indsub(prop: PropertyLike, cg: ColoredGraph) -> CountResult:
    """
    Number of transversals (exactly one vertex of each color) whose induced
    graph satisfies Φ.

    Raises:
        CapacityError: the product of the color-class sizes exceeds settings.max_subsets
    """
    ensure_capacity(cg.transversal_count(), settings.max_subsets, "transversal count")
    handle = as_handle(prop)
    total = sum(
        1
        for transversal in product(*cg.color_classes)
        if handle.evaluate(transversal_graph(cg.g, transversal))
    )
    return CountResult(value=total)


def count_cliques(g: Graph, ell: int) -> CountResult:
    """
    Number of ell-vertex cliques of g.

    Raises:
        CapacityError: binom(|V(g)|, ell) exceeds settings.max_subsets
    """
    if ell < 0:
        raise InputError(f"clique size must be nonnegative, got {ell}")
    ensure_capacity(comb(g.n, ell), settings.max_subsets, "clique candidate count")
    if ell == 0:
        return CountResult(value=1)

    def extend(candidates: int, remaining: int) -> int:
        if remaining == 1:
            return popcount(candidates)
        total = 0
        for v in iter_bits(candidates):
            # only later neighbors, so each clique is counted once
            total += extend(candidates & g.adjacency[v] & ~((2 << v) - 1), remaining - 1)
        return total

    return CountResult(value=extend(g.all_vertices, ell))
