"""
Bitmask implementations of the structural invariants that graph properties query.
"""

from typing import List, Optional

from src.graphs.graph import Graph
from src.utils.bits import iter_bits, popcount


def reachable(g: Graph, source: int, within: Optional[int] = None) -> int:
    """Bitmask of vertices reachable from source, optionally staying inside within."""
    allowed = g.all_vertices if within is None else within
    seen = 1 << source
    frontier = seen
    while frontier:
        grown = 0
        for v in iter_bits(frontier):
            grown |= g.adjacency[v]
        grown &= allowed & ~seen
        seen |= grown
        frontier = grown
    return seen


def components(g: Graph) -> List[int]:
    remaining = g.all_vertices
    found = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        component = reachable(g, start)
        found.append(component)
        remaining &= ~component
    return found


def is_connected(g: Graph) -> bool:
    """Graphs on at most one vertex count as connected."""
    if g.n <= 1:
        return True
    return reachable(g, 0) == g.all_vertices


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in iter_bits(g.adjacency[v]):
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    return False
    return True


def eccentricity(g: Graph, source: int) -> Optional[int]:
    """Largest BFS distance from source; None when some vertex is unreachable."""
    seen = 1 << source
    frontier = seen
    distance = 0
    while True:
        grown = 0
        for v in iter_bits(frontier):
            grown |= g.adjacency[v]
        grown &= ~seen
        if not grown:
            break
        seen |= grown
        frontier = grown
        distance += 1
    return distance if seen == g.all_vertices else None


def diameter(g: Graph) -> Optional[int]:
    """Diameter, or None for a disconnected graph (treated as infinite)."""
    best = 0
    for v in range(g.n):
        ecc = eccentricity(g, v)
        if ecc is None:
            return None
        best = max(best, ecc)
    return best


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def independence_number(g: Graph) -> int:
    """Size of a maximum independent set, by branching on a max-degree vertex."""

    def solve(candidates: int) -> int:
        if not candidates:
            return 0
        pivot = -1
        pivot_degree = -1
        for v in iter_bits(candidates):
            degree = popcount(g.adjacency[v] & candidates)
            if degree > pivot_degree:
                pivot, pivot_degree = v, degree
        if pivot_degree == 0:
            return popcount(candidates)
        without = candidates & ~(1 << pivot)
        take = 1 + solve(without & ~g.adjacency[pivot])
        return max(take, solve(without))

    return solve(g.all_vertices)


def is_clique(g: Graph) -> bool:
    return 2 * g.m == g.n * (g.n - 1)
