"""
Registry of built-in properties, and resolution of property arguments.
"""

from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Union

from loguru import logger

from src.core.errors import InputError
from src.properties.grammar import parse_property
from src.properties.handle import PropertyHandle
from src.properties.spec import PropertySpec

BUILTIN_PROPERTIES: Dict[str, str] = {
    "always_true": "true",
    "always_false": "false",
    "bipartite": "bipartite",
    "independent": "independent",
    "clique": "clique",
    "connected": "connected",
    "disconnected": "disconnected",
    "indset3": "has_independent_set(3)",
    "phi1_half": "disconnected or diam >= 1/2 n",
    "phi2_3": "bipartite or has_independent_set(3)",
    "phi3_three_quarters": "max_degree <= 3/4 n",
    "even_edges": "edge_parity(even)",
}


def builtin_names() -> List[str]:
    return sorted(BUILTIN_PROPERTIES)


@lru_cache(maxsize=None)
def builtin_property(name: str) -> PropertySpec:
    """
    Raises:
        InputError: unknown name
    """
    try:
        text = BUILTIN_PROPERTIES[name]
    except KeyError:
        raise InputError(
            f"unknown built-in property {name!r}; choose from {', '.join(builtin_names())}"
        ) from None
    return parse_property(text)


@lru_cache(maxsize=None)
def builtin_handle(name: str) -> PropertyHandle:
    """Shared handle, so memo and monotonicity verification are reused across calls."""
    return PropertyHandle(builtin_property(name))


def load_property(path: Union[str, Path]) -> PropertySpec:
    """Parse a property file (one property per file, UTF-8)."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read property file {path}: {e}") from e
    return parse_property(text)


def resolve_property(argument: str) -> PropertyHandle:
    """
    Turn a CLI property argument into a handle: a built-in name, a path to a
    property file, or inline DSL text, tried in that order.
    """
    if argument in BUILTIN_PROPERTIES:
        return builtin_handle(argument)
    candidate = Path(argument)
    if candidate.suffix and candidate.is_file():
        logger.debug(f"Loading property from {candidate}")
        return PropertyHandle(load_property(candidate))
    return PropertyHandle(parse_property(argument))
