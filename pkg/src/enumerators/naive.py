"""
The exact alternating enumerator χ̂(Φ, H) = Σ_{S ⊆ E(H)} Φ(H[S]) (-1)^{|S|}.

The polarity inferred from the expression tree picks the strategy:

- closed under edge deletion: interval splitting. An interval [F, F ∪ O] of edge
  sets contributes 0 once Φ holds on its top and O is not empty, and nothing once
  Φ fails on its bottom.
- closed under edge insertion: the same, after substituting S -> E(H) - S.
- constant: Φ(∅) when H has no edges, else 0.
- otherwise: every subset in Gray-code order.

Large sums are cut into independent parts that run on a process pool.
"""

from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from typing import Iterator, List, Tuple

from cachetools import LRUCache
from loguru import logger

from src.config.settings import settings
from src.core.errors import ensure_capacity
from src.graphs.graph import Graph
from src.properties.ast import Polarity
from src.properties.checks import PropertyLike, as_handle
from src.properties.spec import PropertySpec
from src.utils.bits import iter_bits, parity_sign

AltEnumExact = int

# Below this many edges one process does the whole sum
PARALLEL_MIN_EDGES = 20

# Levels of interval splitting done before handing parts to workers
SPLIT_DEPTH = 2

Part = Tuple[int, int, int]  # (sign, bottom, open edges)


class EdgeMaskOracle:
    """Φ on edge subsets of one graph, memoized by edge mask.

    With complemented=True the oracle answers Φ(H[E - S]) for the mask of S.
    """

    def __init__(self, spec: PropertySpec, g: Graph, complemented: bool = False):
        self.spec = spec
        self.g = g
        self.flip = g.full_edge_mask if complemented else 0
        self.evaluations = 0
        self._memo: LRUCache = LRUCache(maxsize=settings.memo_size)

    def __call__(self, mask: int) -> bool:
        value = self._memo.get(mask)
        if value is None:
            value = self.spec.holds(self.g.edge_subgraph(mask ^ self.flip))
            self._memo[mask] = value
            self.evaluations += 1
        return value


def _addable(holds: EdgeMaskOracle, bottom: int, candidates: int) -> int:
    """Candidates e with Φ(bottom + e)."""
    found = 0
    for e in iter_bits(candidates):
        bit = 1 << e
        if holds(bottom | bit):
            found |= bit
    return found


def down_sum(holds: EdgeMaskOracle, bottom: int, open_edges: int) -> int:
    """
    Σ_{S ⊆ open_edges} Φ(bottom ∪ S) (-1)^{|S|} for Φ closed under edge deletion.

    Requires Φ(bottom) and Φ(bottom + e) for every open edge e.
    """
    total = 0
    while open_edges:
        if holds(bottom | open_edges):
            return total
        low = open_edges & -open_edges
        open_edges ^= low
        grown = bottom | low
        total -= down_sum(holds, grown, _addable(holds, grown, open_edges))
    return total + 1


def split_parts(holds: EdgeMaskOracle, bottom: int, open_edges: int, sign: int, depth: int) -> Iterator[Part]:
    """Parts whose signed down_sum values add up to sign * down_sum(bottom, open_edges)."""
    if depth == 0:
        yield sign, bottom, open_edges
        return
    while open_edges:
        if holds(bottom | open_edges):
            return
        low = open_edges & -open_edges
        open_edges ^= low
        grown = bottom | low
        yield from split_parts(holds, grown, _addable(holds, grown, open_edges), -sign, depth - 1)
    yield sign, bottom, 0


def _down_part(spec: PropertySpec, g: Graph, complemented: bool, part: Part) -> int:
    sign, bottom, open_edges = part
    return sign * down_sum(EdgeMaskOracle(spec, g, complemented), bottom, open_edges)


def gray_sum(spec: PropertySpec, g: Graph, high: int, low_bits: int) -> int:
    """
    Σ Φ(H[S]) (-1)^{|S|} over the S that agree with high above the low_bits
    lowest edges, walking those edges in Gray-code order.
    """
    mask = high
    sign = parity_sign(high)
    holds = spec.holds
    subgraph = g.edge_subgraph
    total = sign if holds(subgraph(mask)) else 0
    for step in range(1, 1 << low_bits):
        mask ^= step & -step
        sign = -sign
        if holds(subgraph(mask)):
            total += sign
    return total


def _workers_for(g: Graph) -> int:
    return 1 if g.m < PARALLEL_MIN_EDGES else settings.worker_count


def _monotone_sum(spec: PropertySpec, g: Graph, complemented: bool) -> int:
    holds = EdgeMaskOracle(spec, g, complemented)
    if not holds(0):
        return 0
    open_edges = _addable(holds, 0, g.full_edge_mask)
    workers = _workers_for(g)
    if workers == 1:
        total = down_sum(holds, 0, open_edges)
        logger.debug(f"Interval splitting on {g} used {holds.evaluations} evaluations of Φ")
        return total

    parts: List[Part] = list(split_parts(holds, 0, open_edges, 1, SPLIT_DEPTH))
    logger.debug(f"Interval splitting on {g} in {len(parts)} parts over {workers} processes")
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return sum(executor.map(_down_part, repeat(spec), repeat(g), repeat(complemented), parts))


def _gray_total(spec: PropertySpec, g: Graph) -> int:
    workers = _workers_for(g)
    if workers == 1:
        return gray_sum(spec, g, 0, g.m)

    split_bits = min(g.m, workers.bit_length() + 2)
    low_bits = g.m - split_bits
    highs = [prefix << low_bits for prefix in range(1 << split_bits)]
    logger.debug(f"Gray-code walk over {1 << g.m} subsets in {len(highs)} parts over {workers} processes")
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return sum(executor.map(gray_sum, repeat(spec), repeat(g), highs, repeat(low_bits)))


def alt_enum_naive(prop: PropertyLike, g: Graph) -> AltEnumExact:
    """
    χ̂(Φ, H) = Σ_{S ⊆ E(H)} Φ(H[S]) (-1)^{|S|}, exactly.

    Raises:
        CapacityError: more edges than settings.max_edges_naive
    """
    ensure_capacity(g.m, settings.max_edges_naive, "edge count for the naive alternating enumerator")
    spec = as_handle(prop).spec
    polarity = spec.polarity
    if polarity is Polarity.CONSTANT:
        return int(spec.holds(g.edge_subgraph(0))) if g.m == 0 else 0
    if polarity is Polarity.DECREASING:
        return _monotone_sum(spec, g, complemented=False)
    if polarity is Polarity.INCREASING:
        # S -> E - S turns an insertion-closed Φ into a deletion-closed one
        return parity_sign(g.full_edge_mask) * _monotone_sum(spec, g, complemented=True)
    return _gray_total(spec, g)
