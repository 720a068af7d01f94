"""
Meta-checks on properties: edge-monotonicity and triviality on k vertices.
"""

from dataclasses import dataclass
from typing import Optional, Union

from loguru import logger

from src.config.settings import HARD_MAX_MONOTONE_N
from src.core.errors import CapacityError, InputError
from src.graphs.generators import complete_graph, empty_graph
from src.graphs.graph import Edge, Graph
from src.properties.handle import PropertyHandle
from src.properties.spec import PropertySpec

PropertyLike = Union[PropertySpec, PropertyHandle]


def as_handle(prop: PropertyLike) -> PropertyHandle:
    if isinstance(prop, PropertyHandle):
        return prop
    return PropertyHandle(prop)


@dataclass(frozen=True)
class MonotoneCheck:
    """Outcome of is_edge_monotone_upto: pass, or the first violating (graph, edge)."""

    passed: bool
    nmax: int
    graph: Optional[Graph] = None
    edge: Optional[Edge] = None

    def describe(self) -> str:
        if self.passed:
            return f"edge-monotone on all graphs with at most {self.nmax} vertices"
        return f"deleting edge {self.edge} from {self.graph} breaks the property"


def is_edge_monotone_upto(prop: PropertyLike, nmax: int) -> MonotoneCheck:
    """
    Check that Φ(g) = 1 implies Φ(g - e) = 1 for every graph on at most nmax
    vertices and every edge e.

    Graphs are visited by vertex count, then by ascending edge mask over K_n;
    edges by ascending index. The first violation in that order is returned.

    Raises:
        CapacityError: nmax exceeds 7
    """
    if nmax > HARD_MAX_MONOTONE_N:
        raise CapacityError(
            f"edge-monotonicity check size {nmax} exceeds the limit of {HARD_MAX_MONOTONE_N}"
        )
    handle = as_handle(prop)
    for n in range(1, nmax + 1):
        host = complete_graph(n)
        values = bytearray(1 << host.m)
        for mask in range(1 << host.m):
            values[mask] = handle.evaluate_subgraph(host, mask)
        for mask in range(1 << host.m):
            if not values[mask]:
                continue
            for i in range(host.m):
                bit = 1 << i
                if mask & bit and not values[mask ^ bit]:
                    witness = Graph(n, tuple(host.edges_of_mask(mask)))
                    logger.debug(f"{handle} is not edge-monotone: {witness} minus {host.edges[i]}")
                    return MonotoneCheck(False, nmax, witness, host.edges[i])
    return MonotoneCheck(True, nmax)


def is_trivial_on(prop: PropertyLike, k: int, method: str = "auto") -> bool:
    """
    True iff Φ is constant on k-vertex graphs.

    Args:
        prop: property or handle
        k: vertex count
        method: "fast" uses Φ(IS_k) and Φ(K_k) and needs a verified edge-monotone
            property; "general" enumerates all k-vertex graphs (k <= 7); "auto"
            takes the fast path whenever it is allowed

    Raises:
        CapacityError: general path with k > 7
        HypothesisError: fast path requested for a property that is not verified
            edge-monotone
    """
    if k < 0:
        raise InputError(f"vertex count must be nonnegative, got {k}")
    if method not in ("auto", "fast", "general"):
        raise InputError(f"unknown triviality method {method!r}")
    handle = as_handle(prop)

    use_fast = method == "fast"
    if method == "auto" and handle.spec.declared_edge_monotone:
        use_fast = handle.verify_edge_monotone() is None
    if use_fast:
        handle.require_edge_monotone()
        # An edge-monotone property is nontrivial on k iff IS_k satisfies it and K_k does not
        return not (handle.evaluate(empty_graph(k)) and not handle.evaluate(complete_graph(k)))

    if k > HARD_MAX_MONOTONE_N:
        raise CapacityError(f"triviality check on {k} vertices exceeds the limit of {HARD_MAX_MONOTONE_N}")
    host = complete_graph(k)
    first = handle.evaluate_subgraph(host, 0)
    return all(handle.evaluate_subgraph(host, mask) == first for mask in range(1, 1 << host.m))


def is_nontrivial_on(prop: PropertyLike, k: int, method: str = "auto") -> bool:
    return not is_trivial_on(prop, k, method)


def evaluate(prop: PropertyLike, g: Graph) -> bool:
    return as_handle(prop).evaluate(g)
