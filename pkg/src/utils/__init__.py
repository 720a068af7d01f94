"""
Bitmask helpers for vertex, edge and orbit sets.
"""

from .bits import iter_bits, mask_of, parity_sign, popcount, submasks

__all__ = ["iter_bits", "mask_of", "parity_sign", "popcount", "submasks"]
