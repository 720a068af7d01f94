"""
Bitmask helpers used for vertex sets, edge sets and orbit sets.
"""

from typing import Iterable, Iterator


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for index in indices:
        mask |= 1 << index
    return mask


def submasks(mask: int) -> Iterator[int]:
    """
    Yield every submask of mask, including 0 and mask itself.

    Order is descending numeric order, which is what the standard
    ``sub = (sub - 1) & mask`` walk produces.
    """
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def parity_sign(mask: int) -> int:
    """(-1) raised to the number of set bits."""
    return -1 if popcount(mask) & 1 else 1
