"""Graph properties: DSL parsing, evaluation and meta-checks."""

from .ast import Node, Polarity
from .builtins import (
    BUILTIN_PROPERTIES,
    builtin_handle,
    builtin_names,
    builtin_property,
    load_property,
    resolve_property,
)
from .checks import (
    MonotoneCheck,
    as_handle,
    evaluate,
    is_edge_monotone_upto,
    is_nontrivial_on,
    is_trivial_on,
)
from .grammar import parse_property
from .handle import PropertyHandle
from .spec import PropertySpec, complement, negate, shift_property

__all__ = [
    "BUILTIN_PROPERTIES",
    "MonotoneCheck",
    "Node",
    "Polarity",
    "PropertyHandle",
    "PropertySpec",
    "as_handle",
    "builtin_handle",
    "builtin_names",
    "builtin_property",
    "complement",
    "evaluate",
    "is_edge_monotone_upto",
    "is_nontrivial_on",
    "is_trivial_on",
    "load_property",
    "negate",
    "parse_property",
    "resolve_property",
    "shift_property",
]
