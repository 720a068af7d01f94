"""Group actions on host graphs: built-in p-groups, edge orbits, fixed-point lattices and families."""

from .families import (
    Embedding,
    difference_graph,
    difference_iso,
    difference_set_of,
    embed_small_set,
    empty_prefix,
    product_biclique_sides,
    product_decomposition,
    product_family,
    product_fixed_point,
    product_level,
    rotation_family,
    sylow_biclique_sides,
    sylow_decomposition,
    sylow_family,
    sylow_fixed_point,
    sylow_level,
    verify_pushdown,
)
from .group import (
    GeneratedGroup,
    product_group,
    rotation_group,
    rotation_power,
    sylow_group,
    sylow_order,
    trivial_group,
)
from .orbits import EdgeOrbit, FixedPoint, FixedPointLattice, edge_orbits, fixed_points, lattice_for

__all__ = [
    "EdgeOrbit",
    "Embedding",
    "FixedPoint",
    "FixedPointLattice",
    "GeneratedGroup",
    "difference_graph",
    "difference_iso",
    "difference_set_of",
    "edge_orbits",
    "embed_small_set",
    "empty_prefix",
    "fixed_points",
    "lattice_for",
    "product_biclique_sides",
    "product_decomposition",
    "product_family",
    "product_fixed_point",
    "product_group",
    "product_level",
    "rotation_family",
    "rotation_group",
    "rotation_power",
    "sylow_biclique_sides",
    "sylow_decomposition",
    "sylow_family",
    "sylow_fixed_point",
    "sylow_group",
    "sylow_level",
    "sylow_order",
    "trivial_group",
    "verify_pushdown",
]
