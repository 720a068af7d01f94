"""
Permutation groups given by generators, and the built-in p-groups.

Rot_{p^m} acts on the elements of F_{p^m} by translations, Syl_{p^m} acts on
[0, p)^m by prefix-conditioned coordinate increments, and product groups act
block-wise on disjoint unions of point sets.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import List, Optional, Sequence, Tuple

from loguru import logger
from sympy import factorint
from sympy.combinatorics import Permutation, PermutationGroup

from src.config.settings import HARD_MAX_VERTICES
from src.core.errors import CapacityError, FalsifiedLemmaError, InputError
from src.fields.gf import FieldSpec
from src.graphs.operations import tuple_vertices

VertexPermutation = Tuple[int, ...]


@dataclass(frozen=True)
class GeneratedGroup:
    """
    A permutation group on [0, degree) given by its generators.

    Attributes:
        degree: number of permuted points
        generators: vertex permutations as image tuples
        prime: the prime p asserted to make this a p-group, if any
        name: label used in reports
    """

    degree: int
    generators: Tuple[VertexPermutation, ...]
    prime: Optional[int] = None
    name: str = "group"

    def __post_init__(self) -> None:
        for generator in self.generators:
            if len(generator) != self.degree or sorted(generator) != list(range(self.degree)):
                raise InputError(f"{self.name}: generator {generator} is not a permutation of [0, {self.degree})")

    @cached_property
    def sympy_group(self) -> PermutationGroup:
        if not self.generators:
            return PermutationGroup([Permutation(list(range(self.degree)))])
        return PermutationGroup([Permutation(list(generator)) for generator in self.generators])

    def order(self) -> int:
        """Group order, computed by sympy's Schreier-Sims."""
        return int(self.sympy_group.order())

    def require_p_group(self) -> None:
        """
        Confirm the asserted prime: the order must be a power of it.

        Raises:
            FalsifiedLemmaError: the order is not a power of the asserted prime
        """
        if self.prime is None:
            return
        order = self.order()
        factors = factorint(order)
        if order != 1 and set(factors) != {self.prime}:
            raise FalsifiedLemmaError(f"{self.name} has order {order}, not a power of {self.prime}")

    def __str__(self) -> str:
        return f"{self.name} ({len(self.generators)} generators on {self.degree} points)"


def _check_degree(degree: int) -> None:
    if degree > HARD_MAX_VERTICES:
        raise CapacityError(f"group acts on {degree} points, limit is {HARD_MAX_VERTICES}")


def trivial_group(degree: int) -> GeneratedGroup:
    return GeneratedGroup(degree, (), None, f"trivial({degree})")


def rotation_group(spec: FieldSpec) -> GeneratedGroup:
    """
    Rot_{p^m}: translations x -> x + c of F_{p^m}, generated by the m translations
    by basis vectors. Points are field elements in canonical order.
    """
    _check_degree(spec.order)
    generators = []
    for i in range(spec.m):
        basis = spec.element([1 if j == i else 0 for j in range(spec.m)])
        generators.append(tuple(spec.index(x + basis) for x in spec.elements))
    return GeneratedGroup(spec.order, tuple(generators), spec.p, f"Rot_{spec.order}")


def sylow_group(p: int, m: int) -> GeneratedGroup:
    """
    Syl_{p^m} on [0, p)^m: for every coordinate j and every prefix w in [0, p)^j,
    the map adding 1 (mod p) to coordinate j exactly when the first j
    coordinates equal w. There are 1 + p + ... + p^(m-1) generators.
    """
    if m < 1:
        raise InputError(f"extension degree must be positive, got {m}")
    _check_degree(p**m)
    vertices = tuple_vertices([p] * m)
    index = {vertex: i for i, vertex in enumerate(vertices)}
    generators: List[VertexPermutation] = []
    for j in range(m):
        for prefix in product(range(p), repeat=j):
            image = []
            for vertex in vertices:
                if vertex[:j] == prefix:
                    shifted = vertex[:j] + ((vertex[j] + 1) % p,) + vertex[j + 1 :]
                    image.append(index[shifted])
                else:
                    image.append(index[vertex])
            generators.append(tuple(image))
    logger.debug(f"Syl_{p**m}: {len(generators)} generators")
    return GeneratedGroup(p**m, tuple(generators), p, f"Syl_{p**m}")


def sylow_order(p: int, m: int) -> int:
    """p^(1 + p + ... + p^(m-1)), the order Syl_{p^m} must have."""
    return p ** sum(p**j for j in range(m))


def product_group(groups: Sequence[GeneratedGroup]) -> GeneratedGroup:
    """
    Direct product acting on the disjoint union of the factors' point sets, block i
    occupying the consecutive points after blocks 0..i-1.
    """
    if not groups:
        raise InputError("product group needs at least one factor")
    if len(groups) == 1:
        return groups[0]
    degree = sum(group.degree for group in groups)
    _check_degree(degree)
    generators = []
    offset = 0
    for group in groups:
        for generator in group.generators:
            image = list(range(degree))
            for v, target in enumerate(generator):
                image[offset + v] = offset + target
            generators.append(tuple(image))
        offset += group.degree
    primes = {group.prime for group in groups}
    prime = primes.pop() if len(primes) == 1 else None
    name = " x ".join(group.name for group in groups)
    return GeneratedGroup(degree, tuple(generators), prime, name)


def rotation_power(spec: FieldSpec, d: int) -> GeneratedGroup:
    """Rot^d_{p^m}: the d-fold product of the rotation group."""
    if d < 1:
        raise InputError(f"number of blocks must be positive, got {d}")
    group = product_group([rotation_group(spec)] * d)
    if d > 1:
        group = GeneratedGroup(group.degree, group.generators, group.prime, f"Rot^{d}_{spec.order}")
    return group
