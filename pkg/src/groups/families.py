"""
Closed-form fixed-point families.

- Rot_{p^m} on K_{p^m}: difference graphs C^A for A ⊆ F^+.
- Syl_{p^m} on K_{p^m}: lexicographic products C^{A_1}_p o ... o C^{A_m}_p.
- Rot^d_{p^m} on K_{d p^m}: inhabited graphs C[C^{A_1}, ..., C^{A_d}].

Every family member can be decomposed back into its parameters from the orbit
label of each edge, which is how lattice points are mapped to families.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from src.core.errors import DomainError, InputError
from src.fields.gf import FieldElem, FieldSpec, canonical, coerce_subset, field_make, plus_set
from src.graphs.generators import all_graphs
from src.graphs.graph import Graph
from src.graphs.operations import (
    forward_revolution,
    inhabited_graph,
    lexicographic_product,
    relabel,
    tuple_vertices,
)
from src.graphs.structure import BicliqueSides

Subset = FrozenSet[FieldElem]


def subsets_of(elements: Sequence[FieldElem]) -> Iterator[Subset]:
    """Subsets of a sequence, by bitmask over positions."""
    for mask in range(1 << len(elements)):
        yield frozenset(x for i, x in enumerate(elements) if mask >> i & 1)


# Difference graphs


def difference_graph(spec: FieldSpec, a: Iterable) -> Graph:
    """
    C^A on the elements of the field in canonical order: u ~ v iff u - v ∈ A ∪ (-A).

    Raises:
        InputError: an element of A is not in F^+
    """
    subset = coerce_subset(spec, a)
    differences = set(subset) | {-x for x in subset}
    elements = spec.elements
    edges = [
        (i, j)
        for i in range(len(elements))
        for j in range(i + 1, len(elements))
        if elements[j] - elements[i] in differences
    ]
    return Graph(spec.order, tuple(edges))


def difference_set_of(spec: FieldSpec, g: Graph) -> Subset:
    """
    Recover A from a difference graph C^A.

    Raises:
        InputError: g is not a difference graph over this field
    """
    if g.n != spec.order:
        raise InputError(f"graph has {g.n} vertices, {spec} has {spec.order} elements")
    elements = spec.elements
    subset = frozenset(canonical(elements[v] - elements[u]) for u, v in g.edges)
    if difference_graph(spec, subset) != g:
        raise InputError(f"graph is not a difference graph over {spec}")
    return subset


def _symmetric(subset: Iterable[FieldElem]) -> FrozenSet[FieldElem]:
    return frozenset(subset) | frozenset(-x for x in subset)


def difference_iso(a: Iterable, b: Iterable, spec: FieldSpec) -> Optional[FieldElem]:
    """
    A nonzero λ with λ(A ∪ -A) = B ∪ -B, searched over F^+ then the negatives,
    or None. Such a λ makes C^A and C^B isomorphic.
    """
    sym_a = _symmetric(coerce_subset(spec, a))
    sym_b = _symmetric(coerce_subset(spec, b))
    if len(sym_a) != len(sym_b):
        return None
    plus = plus_set(spec)
    candidates = list(plus) + [-x for x in plus if -x != x]
    for scale in candidates:
        if frozenset(scale * x for x in sym_a) == sym_b:
            return scale
    return None


@dataclass(frozen=True)
class Embedding:
    """Result of embed_small_set: the scale λ and the image B' = canonical(λB)."""

    hypothesis_met: bool
    bound: Optional[Fraction]
    scale: Optional[FieldElem]
    image: Optional[Subset]

    @property
    def found(self) -> bool:
        return self.image is not None


def small_set_bound(spec: FieldSpec, a_size: int) -> Optional[Fraction]:
    """|F^+| / (|F^+| - |A|), or None when A = F^+."""
    plus_size = len(plus_set(spec))
    if a_size >= plus_size:
        return None
    return Fraction(plus_size, plus_size - a_size)


def embed_small_set(a: Iterable, b: Iterable, spec: FieldSpec) -> Embedding:
    """
    Find B' ⊆ A isomorphic to B: the first λ in F* (canonical order) whose scaled
    set λB, mapped into F^+, lies inside A.

    Existence is guaranteed when A is a proper subset of F^+ and
    |B| < |F^+| / (|F^+| - |A|). When that fails the search still runs and
    hypothesis_met is False; an empty result is then legal.
    """
    subset_a = coerce_subset(spec, a)
    subset_b = coerce_subset(spec, b)
    bound = small_set_bound(spec, len(subset_a))
    hypothesis_met = bound is not None and len(subset_b) < bound
    for scale in spec.nonzero():
        image = frozenset(canonical(scale * x) for x in subset_b)
        if image <= subset_a:
            return Embedding(hypothesis_met, bound, scale, image)
    logger.debug(f"No embedding of {sorted(subset_b)} into {sorted(subset_a)} over {spec}")
    return Embedding(hypothesis_met, bound, None, None)


def rotation_family(spec: FieldSpec) -> Iterator[Tuple[Subset, Graph]]:
    """Every fixed point of Rot_{p^m} on K_{p^m}, as (A, C^A)."""
    for subset in subsets_of(plus_set(spec)):
        yield subset, difference_graph(spec, subset)


# Sylow fixed points


def _check_sylow_lists(p: int, m: int, a_list: Sequence[Iterable]) -> Tuple[FieldSpec, List[Subset]]:
    if len(a_list) != m:
        raise InputError(f"expected {m} difference sets, got {len(a_list)}")
    prime_field = field_make(p, 1)
    return prime_field, [coerce_subset(prime_field, a) for a in a_list]


def sylow_fixed_point(p: int, m: int, a_list: Sequence[Iterable]) -> Graph:
    """C^{A_1}_p o ... o C^{A_m}_p on [0, p)^m, tuple vertices in lexicographic order."""
    prime_field, subsets = _check_sylow_lists(p, m, a_list)
    return lexicographic_product([difference_graph(prime_field, a) for a in subsets])


def sylow_level(a_list: Sequence[Iterable]) -> int:
    return sum(len(frozenset(a)) for a in a_list)


def empty_prefix(a_list: Sequence[Iterable]) -> int:
    """
    The number of leading empty sets in (A_1, ..., A_m).

    Raises:
        DomainError: every A_i is empty
    """
    for i, a in enumerate(a_list):
        if frozenset(a):
            return i
    raise DomainError("empty prefix is undefined when every difference set is empty")


def sylow_decomposition(p: int, m: int, g: Graph) -> List[Subset]:
    """
    Recover (A_1, ..., A_m) from a Sylow fixed point via the orbit label of each
    edge: the first differing coordinate and the canonical coordinate difference.

    Raises:
        InputError: g is not a Sylow fixed point
    """
    prime_field = field_make(p, 1)
    vertices = tuple_vertices([p] * m)
    if g.n != len(vertices):
        raise InputError(f"graph has {g.n} vertices, expected {len(vertices)}")
    collected: List[set] = [set() for _ in range(m)]
    for u, v in g.edges:
        i, difference = sylow_edge_label(prime_field, vertices[u], vertices[v])
        collected[i].add(difference)
    subsets = [frozenset(c) for c in collected]
    if sylow_fixed_point(p, m, subsets) != g:
        raise InputError(f"graph is not a fixed point of Syl_{p**m}")
    return subsets


def sylow_edge_label(prime_field: FieldSpec, u: Tuple[int, ...], v: Tuple[int, ...]) -> Tuple[int, FieldElem]:
    i = next(k for k in range(len(u)) if u[k] != v[k])
    return i, canonical(prime_field.element(u[i] - v[i]))


def sylow_biclique_sides(p: int, m: int, a_list: Sequence[Iterable]) -> BicliqueSides:
    """
    K_{a,a} with a = p^(m-1-w) inside a Sylow fixed point, w its empty prefix.

    Both sides have zeros before coordinate w; coordinate w is 0 on one side and
    some x ∈ A_w on the other; the remaining coordinates are free.
    """
    _, subsets = _check_sylow_lists(p, m, a_list)
    w = empty_prefix(subsets)
    x = min(subsets[w]).coeffs[0]
    vertices = tuple_vertices([p] * m)
    left = [i for i, t in enumerate(vertices) if not any(t[:w]) and t[w] == 0]
    right = [i for i, t in enumerate(vertices) if not any(t[:w]) and t[w] == x]
    return left, right


def sylow_family(p: int, m: int) -> Iterator[List[Subset]]:
    """Every parameter list (A_1, ..., A_m) of a Sylow fixed point."""
    plus = plus_set(field_make(p, 1))
    for combo in product(list(subsets_of(plus)), repeat=m):
        yield list(combo)


def pushed_down(a_list: Sequence[Iterable], j: int) -> List[Subset]:
    """(∅, ..., ∅, A_1, ..., A_{m-j}) with j leading empty sets."""
    m = len(a_list)
    if not 0 <= j <= m:
        raise InputError(f"shift {j} outside 0..{m}")
    return [frozenset()] * j + [frozenset(a) for a in a_list[: m - j]]


def pushdown_embeds(p: int, m: int, a_list: Sequence[Iterable], j: int) -> bool:
    """
    True iff the pushed-down point is an edge-subgraph of the j-fold forward
    revolution of the original point.
    """
    original = sylow_fixed_point(p, m, a_list)
    pushed = sylow_fixed_point(p, m, pushed_down(a_list, j))
    revolution = tuple(range(original.n))
    step = forward_revolution(p, m)
    for _ in range(j):
        revolution = tuple(step[v] for v in revolution)
    image = set(relabel(original, revolution).edges)
    return set(pushed.edges) <= image


def verify_pushdown(p: int, m: int) -> bool:
    """pushdown_embeds for every parameter list and every shift 1..m-1."""
    for a_list in sylow_family(p, m):
        for j in range(1, m):
            if not pushdown_embeds(p, m, a_list, j):
                logger.error(f"Pushdown fails for {[sorted(map(str, a)) for a in a_list]} with shift {j}")
                return False
    return True


# Product fixed points


def product_fixed_point(c: Graph, a_lists: Sequence[Iterable], spec: FieldSpec) -> Graph:
    """C[C^{A_1}, ..., C^{A_d}], blocks of p^m consecutive vertices."""
    if len(a_lists) != c.n:
        raise InputError(f"connection graph has {c.n} vertices but {len(a_lists)} difference sets were given")
    return inhabited_graph(c, [difference_graph(spec, a) for a in a_lists])


def product_level(c: Graph, a_lists: Sequence[Iterable]) -> int:
    return c.m + sum(len(frozenset(a)) for a in a_lists)


def product_decomposition(spec: FieldSpec, d: int, g: Graph) -> Tuple[Graph, List[Subset]]:
    """
    Recover (C, A_1, ..., A_d) from a fixed point of Rot^d on K_{d p^m}.

    Raises:
        InputError: g is not such a fixed point
    """
    q = spec.order
    if g.n != d * q:
        raise InputError(f"graph has {g.n} vertices, expected {d * q}")
    elements = spec.elements
    connections = set()
    collected: List[set] = [set() for _ in range(d)]
    for u, v in g.edges:
        block_u, block_v = u // q, v // q
        if block_u == block_v:
            collected[block_u].add(canonical(elements[v % q] - elements[u % q]))
        else:
            connections.add((block_u, block_v))
    c = Graph.from_edges(d, connections)
    subsets = [frozenset(a) for a in collected]
    if product_fixed_point(c, subsets, spec) != g:
        raise InputError(f"graph is not a fixed point of Rot^{d}_{q}")
    return c, subsets


def product_biclique_sides(spec: FieldSpec, c: Graph) -> Optional[BicliqueSides]:
    """Two fully connected blocks for the first edge of C, or None when C is empty."""
    if not c.edges:
        return None
    q = spec.order
    i, j = c.edges[0]
    return list(range(i * q, (i + 1) * q)), list(range(j * q, (j + 1) * q))


def product_family(spec: FieldSpec, d: int) -> Iterator[Tuple[Graph, List[Subset]]]:
    """Every fixed point parameter (C, A_1, ..., A_d) of Rot^d on K_{d p^m}."""
    plus = plus_set(spec)
    all_subsets = list(subsets_of(plus))
    for c in all_graphs(d):
        for combo in product(all_subsets, repeat=d):
            yield c, list(combo)
