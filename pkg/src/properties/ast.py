"""
Expression tree of graph properties.

Every node is isomorphism-invariant: atoms only query structural invariants.
Each node also reports its monotonicity polarity, which drives the declared
edge-monotone flag of a property.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import FrozenSet, Optional, Tuple

from src.graphs.graph import Graph
from src.graphs.invariants import (
    diameter,
    independence_number,
    is_bipartite,
    is_clique,
    is_connected,
    max_degree,
)
from src.graphs.operations import complement as complement_graph
from src.graphs.operations import disjoint_union

SourcePosition = Optional[Tuple[int, int]]


class Polarity(str, Enum):
    """How a property reacts to edge deletion and insertion."""

    CONSTANT = "constant"  # unaffected by edge changes
    DECREASING = "decreasing"  # closed under edge deletion (edge-monotone)
    INCREASING = "increasing"  # closed under edge insertion
    NONE = "none"

    def flipped(self) -> "Polarity":
        if self is Polarity.DECREASING:
            return Polarity.INCREASING
        if self is Polarity.INCREASING:
            return Polarity.DECREASING
        return self

    @property
    def closed_under_deletion(self) -> bool:
        return self in (Polarity.CONSTANT, Polarity.DECREASING)


def combine_polarities(polarities: Tuple[Polarity, ...]) -> Polarity:
    moving = {polarity for polarity in polarities if polarity is not Polarity.CONSTANT}
    if not moving:
        return Polarity.CONSTANT
    if len(moving) == 1:
        return moving.pop()
    return Polarity.NONE


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"


class Comparison(str, Enum):
    LE = "<="
    GE = ">="
    EQ = "=="

    def holds(self, left: int, right: int) -> bool:
        if self is Comparison.LE:
            return left <= right
        if self is Comparison.GE:
            return left >= right
        return left == right


class Node:
    """Base class of property expression nodes."""

    def holds(self, g: Graph) -> bool:
        raise NotImplementedError

    def polarity(self) -> Polarity:
        raise NotImplementedError


@dataclass(frozen=True)
class Const(Node):
    value: bool
    position: SourcePosition = field(default=None, compare=False)

    def holds(self, g: Graph) -> bool:
        return self.value

    def polarity(self) -> Polarity:
        return Polarity.CONSTANT

    def __str__(self) -> str:
        return "true" if self.value else "false"


class SimpleKind(str, Enum):
    CONNECTED = "connected"
    DISCONNECTED = "disconnected"
    BIPARTITE = "bipartite"
    CLIQUE = "clique"
    INDEPENDENT = "independent"


_SIMPLE_POLARITY = {
    SimpleKind.CONNECTED: Polarity.INCREASING,
    SimpleKind.DISCONNECTED: Polarity.DECREASING,
    SimpleKind.BIPARTITE: Polarity.DECREASING,
    SimpleKind.CLIQUE: Polarity.INCREASING,
    SimpleKind.INDEPENDENT: Polarity.DECREASING,
}


@dataclass(frozen=True)
class SimpleAtom(Node):
    kind: SimpleKind
    position: SourcePosition = field(default=None, compare=False)

    def holds(self, g: Graph) -> bool:
        if self.kind is SimpleKind.CONNECTED:
            return is_connected(g)
        if self.kind is SimpleKind.DISCONNECTED:
            return not is_connected(g)
        if self.kind is SimpleKind.BIPARTITE:
            return is_bipartite(g)
        if self.kind is SimpleKind.CLIQUE:
            return is_clique(g)
        return g.m == 0

    def polarity(self) -> Polarity:
        return _SIMPLE_POLARITY[self.kind]

    def __str__(self) -> str:
        return self.kind.value


@dataclass(frozen=True)
class EdgeParity(Node):
    parity: Parity
    position: SourcePosition = field(default=None, compare=False)

    def holds(self, g: Graph) -> bool:
        return (g.m % 2 == 0) == (self.parity is Parity.EVEN)

    def polarity(self) -> Polarity:
        return Polarity.NONE

    def __str__(self) -> str:
        return f"edge_parity({self.parity.value})"


def _format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class MaxDegreeAtMost(Node):
    """max_degree <= q * n, compared exactly."""

    ratio: Fraction
    position: SourcePosition = field(default=None, compare=False)

    def holds(self, g: Graph) -> bool:
        return max_degree(g) * self.ratio.denominator <= self.ratio.numerator * g.n

    def polarity(self) -> Polarity:
        return Polarity.DECREASING

    def __str__(self) -> str:
        return f"max_degree <= {_format_rational(self.ratio)} n"


@dataclass(frozen=True)
class DiameterAtLeast(Node):
    """diam >= q * n; a disconnected graph has infinite diameter."""

    ratio: Fraction
    position: SourcePosition = field(default=None, compare=False)

    def holds(self, g: Graph) -> bool:
        value = diameter(g)
        if value is None:
            return True
        return value * self.ratio.denominator >= self.ratio.numerator * g.n

    def polarity(self) -> Polarity:
        return Polarity.DECREASING

    def __str__(self) -> str:
        return f"diam >= {_format_rational(self.ratio)} n"


@dataclass(frozen=True)
class HasIndependentSet(Node):
    size: int
    position: SourcePosition = field(default=None, compare=False)

    def holds(self, g: Graph) -> bool:
        if self.size <= 0:
            return True
        if g.n < self.size:
            return False
        return independence_number(g) >= self.size

    def polarity(self) -> Polarity:
        return Polarity.DECREASING

    def __str__(self) -> str:
        return f"has_independent_set({self.size})"


@dataclass(frozen=True)
class NumEdges(Node):
    comparison: Comparison
    bound: int
    position: SourcePosition = field(default=None, compare=False)

    def holds(self, g: Graph) -> bool:
        return self.comparison.holds(g.m, self.bound)

    def polarity(self) -> Polarity:
        if self.comparison is Comparison.LE:
            return Polarity.DECREASING
        if self.comparison is Comparison.GE:
            return Polarity.INCREASING
        return Polarity.NONE

    def __str__(self) -> str:
        return f"num_edges {self.comparison.value} {self.bound}"


@dataclass(frozen=True)
class VertexCountIn(Node):
    counts: FrozenSet[int]
    position: SourcePosition = field(default=None, compare=False)

    def holds(self, g: Graph) -> bool:
        return g.n in self.counts

    def polarity(self) -> Polarity:
        return Polarity.CONSTANT

    def __str__(self) -> str:
        return "vertex_count_in(" + ", ".join(str(c) for c in sorted(self.counts)) + ")"


@dataclass(frozen=True)
class Not(Node):
    operand: Node

    def holds(self, g: Graph) -> bool:
        return not self.operand.holds(g)

    def polarity(self) -> Polarity:
        return self.operand.polarity().flipped()

    def __str__(self) -> str:
        return f"not {_wrap(self.operand)}"


@dataclass(frozen=True)
class And(Node):
    operands: Tuple[Node, ...]

    def holds(self, g: Graph) -> bool:
        return all(operand.holds(g) for operand in self.operands)

    def polarity(self) -> Polarity:
        return combine_polarities(tuple(operand.polarity() for operand in self.operands))

    def __str__(self) -> str:
        return " and ".join(_wrap(operand) for operand in self.operands)


@dataclass(frozen=True)
class Or(Node):
    operands: Tuple[Node, ...]

    def holds(self, g: Graph) -> bool:
        return any(operand.holds(g) for operand in self.operands)

    def polarity(self) -> Polarity:
        return combine_polarities(tuple(operand.polarity() for operand in self.operands))

    def __str__(self) -> str:
        return " or ".join(_wrap(operand) for operand in self.operands)


@dataclass(frozen=True)
class ComplementOf(Node):
    """Evaluates the operand on the complement graph."""

    operand: Node

    def holds(self, g: Graph) -> bool:
        return self.operand.holds(complement_graph(g))

    def polarity(self) -> Polarity:
        return self.operand.polarity().flipped()

    def __str__(self) -> str:
        return f"complement({self.operand})"


@dataclass(frozen=True)
class ShiftedBy(Node):
    """Evaluates the operand on the disjoint union of the input with a fixed graph."""

    operand: Node
    extra: Graph

    def holds(self, g: Graph) -> bool:
        return self.operand.holds(disjoint_union(g, self.extra))

    def polarity(self) -> Polarity:
        return self.operand.polarity()

    def __str__(self) -> str:
        return f"shift({self.operand}; n={self.extra.n}, edges={list(self.extra.edges)})"


def _wrap(node: Node) -> str:
    if isinstance(node, (And, Or)):
        return f"({node})"
    return str(node)
