"""Finite field arithmetic over F_{p^m} and the half sets F^+."""

from .gf import (
    FieldElem,
    FieldSpec,
    add,
    canonical,
    coerce_subset,
    field_make,
    format_subset,
    inv,
    mul,
    neg,
    plus_set,
    sub,
)

__all__ = [
    "FieldElem",
    "FieldSpec",
    "add",
    "canonical",
    "coerce_subset",
    "field_make",
    "format_subset",
    "inv",
    "mul",
    "neg",
    "plus_set",
    "sub",
]
