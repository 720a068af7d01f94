"""
The cp-IndSub identity

    #cpIndSub(Φ, H)(G) = Σ_{S ⊆ E(H)} Φ(H[S]) Σ_{J ⊆ E(H) - S} (-1)^|J| #cpHom(H[S ∪ J] -> G)

and the coefficients of #cpHom(H[T] -> G) in its right-hand side.
"""

from typing import Dict, List

from loguru import logger

from src.core.errors import InputError, ensure_capacity
from src.graphs.graph import ColoredGraph, Graph
from src.properties.checks import PropertyLike, as_handle
from src.reductions.counting import count_cp_indsub, count_prescribed_hom
from src.utils.bits import parity_sign, submasks

MAX_IDENTITY_EDGES = 10
MAX_COEFFICIENT_EDGES = 6


def cp_hom_table(cg: ColoredGraph) -> List[int]:
    """#cpHom(H[T] -> G) for every edge mask T of the pattern H."""
    return [
        count_prescribed_hom(cg.pattern, cg.g, cg.class_masks, edge_mask)
        for edge_mask in range(1 << cg.pattern.m)
    ]


def verify_cpindsub_identity(prop: PropertyLike, pattern: Graph, cg: ColoredGraph) -> bool:
    """
    Compute both sides of the cp-IndSub identity and compare them.

    Raises:
        InputError: cg is colored by another pattern
        CapacityError: the pattern has more than 10 edges
    """
    if cg.pattern != pattern:
        raise InputError("colored graph is colored by a different pattern")
    ensure_capacity(pattern.m, MAX_IDENTITY_EDGES, "identity pattern edge count")
    handle = as_handle(prop)
    left = count_cp_indsub(handle, cg).value

    cp_hom = cp_hom_table(cg)
    full = pattern.full_edge_mask
    right = 0
    for s in range(1 << pattern.m):
        if not handle.evaluate_subgraph(pattern, s):
            continue
        for j in submasks(full & ~s):
            right += parity_sign(j) * cp_hom[s | j]
    if left != right:
        logger.error(f"cp-IndSub identity fails for {handle} on pattern {pattern}: {left} != {right}")
        return False
    return True


def cp_hom_coefficients(prop: PropertyLike, pattern: Graph) -> Dict[int, int]:
    """
    Signed coefficient of #cpHom(H[T] -> G) for every edge mask T, that is
    Σ_{S ⊆ T} Φ(H[S]) (-1)^(|T| - |S|). Zero coefficients are kept.

    Raises:
        CapacityError: the pattern has more than 6 edges
    """
    ensure_capacity(pattern.m, MAX_COEFFICIENT_EDGES, "coefficient extraction edge count")
    handle = as_handle(prop)
    coefficients = {}
    for t in range(1 << pattern.m):
        total = 0
        for s in submasks(t):
            if handle.evaluate_subgraph(pattern, s):
                total += parity_sign(t ^ s)
        coefficients[t] = total
    return coefficients


def top_coefficient(prop: PropertyLike, pattern: Graph) -> int:
    """Coefficient of #cpHom(H -> G); its absolute value is |χ̂(Φ, H)|."""
    return cp_hom_coefficients(prop, pattern)[pattern.full_edge_mask]
