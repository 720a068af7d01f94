"""
Error hierarchy and capacity checks shared by every subpackage.
"""

from .errors import (
    CapacityError,
    DomainError,
    FalsifiedLemmaError,
    HypothesisError,
    IndsubError,
    InputError,
    PropertySemanticError,
    PropertySyntaxError,
    ensure_capacity,
)

__all__ = [
    "CapacityError",
    "DomainError",
    "FalsifiedLemmaError",
    "HypothesisError",
    "IndsubError",
    "InputError",
    "PropertySemanticError",
    "PropertySyntaxError",
    "ensure_capacity",
]
