"""Alternating enumerators, level vectors, transformation matrices and nonvanishing-point searches."""

from .alternating import LatticeScan, LevelVector, alt_enum_modp, level_vectors
from .duality import TransformMatrix, restrict, transform_matrix, verify_duality
from .naive import AltEnumExact, alt_enum_naive
from .search import (
    NonvanishingPoint,
    check_duality_hypothesis,
    duality_witness,
    minimal_failing_fixed_points,
    minimal_failing_orbit_sets,
    scan_lattice,
)

__all__ = [
    "AltEnumExact",
    "LatticeScan",
    "LevelVector",
    "NonvanishingPoint",
    "TransformMatrix",
    "alt_enum_modp",
    "alt_enum_naive",
    "check_duality_hypothesis",
    "duality_witness",
    "level_vectors",
    "minimal_failing_fixed_points",
    "minimal_failing_orbit_sets",
    "restrict",
    "scan_lattice",
    "transform_matrix",
    "verify_duality",
]
