"""Bitmask vertex-set helpers.

Vertex sets are plain Python ints used as bitmasks: bit v set means
vertex v is in the set.  Union/intersection/difference are single
machine-word-packed integer operations, iteration peels lowest set
bits, and the numeric value of the mask doubles as a deterministic
encoding for ordering enumerations.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest(mask: int) -> int:
    """Index of the lowest set bit; mask must be non-zero."""
    return (mask & -mask).bit_length() - 1
