"""
Immutable property specifications and the transforms negate, complement and shift.
"""

from dataclasses import dataclass

from src.graphs.graph import Graph
from src.properties.ast import ComplementOf, Node, Not, Polarity, ShiftedBy


@dataclass(frozen=True)
class PropertySpec:
    """
    A graph property: an expression tree plus its declared edge-monotonicity.

    The declaration is only a claim; witness searches verify it through
    PropertyHandle.require_edge_monotone before trusting it.
    """

    ast: Node
    declared_edge_monotone: bool = False
    source: str = ""

    def holds(self, g: Graph) -> bool:
        return self.ast.holds(g)

    @property
    def polarity(self) -> Polarity:
        return self.ast.polarity()

    def __str__(self) -> str:
        return self.source or str(self.ast)


def negate(spec: PropertySpec) -> PropertySpec:
    """¬Φ(G) = 1 - Φ(G)."""
    ast = Not(spec.ast)
    return PropertySpec(ast, ast.polarity().closed_under_deletion, f"not ({spec})")


def complement(spec: PropertySpec) -> PropertySpec:
    """Φ̄(G) = Φ(complement of G)."""
    ast = ComplementOf(spec.ast)
    return PropertySpec(ast, ast.polarity().closed_under_deletion, f"complement({spec})")


def shift_property(spec: PropertySpec, h: Graph) -> PropertySpec:
    """(Φ - H)(G) = Φ(G ⊎ H). Keeps the edge-monotone declaration."""
    if h.n == 0:
        return spec
    return PropertySpec(
        ShiftedBy(spec.ast, h),
        spec.declared_edge_monotone,
        f"shift({spec}; n={h.n}, edges={list(h.edges)})",
    )
