"""
Clique gadget: an F-colored graph G' whose color-prescribed homomorphisms from F
are in bijection with the ell-cliques of G, for any F containing K_{ell,ell}.
"""

from typing import List

from loguru import logger

from src.core.errors import InputError, ensure_capacity
from src.graphs.graph import ColoredGraph, Edge, Graph
from src.graphs.structure import find_biclique

MAX_GADGET_PATTERN_N = 6
MAX_GADGET_HOST_N = 8


def clique_gadget(f: Graph, ell: int, g: Graph) -> ColoredGraph:
    """
    Build G' on vertices u_{i,j}, w_{i,j} (i < ell, j < |V(g)|) and y_k
    (k < |V(f)| - 2 ell), colored by f.

    The first K_{ell,ell} of f in combination order gives the sides a_0..a_{ell-1}
    and b_0..b_{ell-1}; the remaining vertices of f are x_0, x_1, ... in ascending
    order. c(u_{i,j}) = a_i, c(w_{i,j}) = b_i, c(y_k) = x_k.

    u_{i,j} ~ w_{i',j'} iff (i, j) = (i', j'), or i < i' and j < j' with v_j ~ v_j',
    or i > i' and j > j' with v_j ~ v_j'. Every other pair of vertices is joined
    exactly when their colors are adjacent in f.

    Vertex layout: u_{i,j} = i*n + j, w_{i,j} = ell*n + i*n + j, y_k = 2*ell*n + k.

    Raises:
        InputError: ell < 2, or f does not contain K_{ell,ell}
        CapacityError: f has more than 6 vertices or g more than 8
    """
    if ell < 2:
        raise InputError(f"clique gadget needs ell >= 2, got {ell}")
    ensure_capacity(f.n, MAX_GADGET_PATTERN_N, "gadget pattern vertex count")
    ensure_capacity(g.n, MAX_GADGET_HOST_N, "gadget host vertex count")
    sides = find_biclique(f, ell)
    if sides is None:
        raise InputError(f"pattern {f} does not contain K_{{{ell},{ell}}}")
    left, right = sides
    rest = [v for v in range(f.n) if v not in left and v not in right]
    n = g.n

    def u(i: int, j: int) -> int:
        return i * n + j

    def w(i: int, j: int) -> int:
        return ell * n + i * n + j

    coloring: List[int] = [left[i] for i in range(ell) for _ in range(n)]
    coloring += [right[i] for i in range(ell) for _ in range(n)]
    coloring += rest
    total = len(coloring)

    cross = set()
    for i in range(ell):
        for i2 in range(ell):
            for j in range(n):
                for j2 in range(n):
                    if (i, j) == (i2, j2):
                        cross.add((u(i, j), w(i2, j2)))
                    elif ((i < i2 and j < j2) or (i > i2 and j > j2)) and g.has_edge(j, j2):
                        cross.add((u(i, j), w(i2, j2)))

    edges: List[Edge] = []
    uw_boundary = ell * n
    w_boundary = 2 * ell * n
    for a in range(total):
        for b in range(a + 1, total):
            if not f.has_edge(coloring[a], coloring[b]):
                continue
            if a < uw_boundary <= b < w_boundary:
                if (a, b) in cross:
                    edges.append((a, b))
            else:
                edges.append((a, b))
    logger.debug(
        f"Clique gadget for ell={ell}: sides {left} / {right}, {total} vertices, {len(edges)} edges"
    )
    return ColoredGraph(Graph(total, tuple(edges)), f, tuple(coloring))
