"""Vertex sets as Python int bitmasks.

Bit v set means vertex v is in the set.  Python ints are arbitrary
precision, so no width bookkeeping is needed; callers guarantee all set
bits are < n.
"""

from __future__ import annotations

from collections.abc import Iterable


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> list[int]:
    """Set bits of `mask` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    """Index of the lowest set bit; mask must be nonzero."""
    return (mask & -mask).bit_length() - 1


def set_key(mask: int) -> tuple[int, ...]:
    """Sort key realizing lexicographic order on ascending vertex lists."""
    return tuple(bits(mask))
