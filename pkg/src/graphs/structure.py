"""
Structural certificates at desk scale: isomorphism, biclique containment,
exact treewidth and regularity.
"""

from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from loguru import logger

from src.config.settings import settings
from src.core.errors import InputError, ensure_capacity
from src.graphs.graph import Graph
from src.graphs.invariants import reachable
from src.utils.bits import iter_bits, mask_of, popcount

BicliqueSides = Tuple[Iterable[int], Iterable[int]]


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """
    Exhaustive isomorphism test with degree pruning.

    Raises:
        CapacityError: if either graph exceeds the configured vertex cap
    """
    ensure_capacity(max(g1.n, g2.n), settings.max_iso_n, "isomorphism vertex count")
    if g1.n != g2.n or g1.m != g2.m:
        return False
    degrees1, degrees2 = g1.degrees(), g2.degrees()
    if sorted(degrees1) != sorted(degrees2):
        return False

    n = g1.n
    # Place high-degree vertices first, they prune the search hardest.
    order = sorted(range(n), key=lambda v: -degrees1[v])
    image = [-1] * n

    def extend(position: int, used: int) -> bool:
        if position == n:
            return True
        v = order[position]
        for w in range(n):
            if used >> w & 1 or degrees2[w] != degrees1[v]:
                continue
            if all(
                g1.has_edge(v, u) == g2.has_edge(w, image[u]) for u in order[:position]
            ):
                image[v] = w
                if extend(position + 1, used | 1 << w):
                    return True
        image[v] = -1
        return False

    return extend(0, 0)


def find_biclique(g: Graph, a: int) -> Optional[Tuple[List[int], List[int]]]:
    """
    Lexicographically first K_{a,a} as (A, B): A is the first a-subset in combination
    order with at least a common neighbors, B the first a of those neighbors.

    Raises:
        CapacityError: if g exceeds the brute-force vertex cap
    """
    ensure_capacity(g.n, settings.max_biclique_n, "biclique search vertex count")
    if a <= 0:
        return [], []
    for side_a in combinations(range(g.n), a):
        common = g.all_vertices
        for v in side_a:
            common &= g.adjacency[v]
        if popcount(common) >= a:
            return list(side_a), list(iter_bits(common))[:a]
    return None


def biclique_sides_hold(g: Graph, a: int, sides: BicliqueSides) -> bool:
    """Check claimed sides: disjoint, each of size at least a, fully connected."""
    left, right = list(sides[0]), list(sides[1])
    for v in left + right:
        if not 0 <= v < g.n:
            raise InputError(f"biclique side vertex {v} out of range")
    if len(left) < a or len(right) < a or set(left) & set(right):
        return False
    right_mask = mask_of(right)
    return all(g.adjacency[u] & right_mask == right_mask for u in left)


def contains_biclique(g: Graph, a: int, sides: Optional[BicliqueSides] = None) -> bool:
    """
    True iff K_{a,a} is a (not necessarily induced) subgraph of g.

    With sides supplied (construction metadata from a fixed-point family) the claim
    is verified directly, so graphs of any size are accepted. Without sides the
    search is exhaustive and capped.
    """
    if a <= 0:
        return True
    if sides is not None:
        if biclique_sides_hold(g, a, sides):
            return True
        logger.warning(f"Supplied biclique sides do not certify K_{{{a},{a}}}; searching")
    if 2 * a > g.n:
        return False
    ensure_capacity(g.n, settings.max_biclique_n, "biclique search vertex count")
    candidates = [v for v in range(g.n) if g.degree(v) >= a]
    for side in combinations(candidates, a):
        common = g.all_vertices
        for v in side:
            common &= g.adjacency[v]
        if popcount(common) >= a:
            return True
    return False


def treewidth_exact(g: Graph) -> int:
    """
    Exact treewidth by dynamic programming over vertex subsets.

    TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|), where Q(S, v) holds the
    vertices outside S + v reachable from v through S.
    """
    ensure_capacity(g.n, settings.max_tw_n, "treewidth vertex count")
    if g.n == 0:
        return 0
    table = [0] * (1 << g.n)
    table[0] = -1
    for subset in range(1, 1 << g.n):
        best = g.n
        for v in iter_bits(subset):
            rest = subset & ~(1 << v)
            if table[rest] >= best:
                continue
            inside = rest | 1 << v
            component = reachable(g, v, within=inside)
            boundary = 0
            for w in iter_bits(component):
                boundary |= g.adjacency[w]
            boundary &= ~inside
            best = min(best, max(table[rest], popcount(boundary)))
        table[subset] = best
    return max(table[g.all_vertices], 0)


def regular_degree(g: Graph) -> Optional[int]:
    """d if every vertex has degree d, otherwise None."""
    degrees = set(g.degrees())
    if len(degrees) != 1:
        return None
    return degrees.pop()
