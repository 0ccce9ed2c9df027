"""Vertex sets as int bitmasks.

Bit ``v`` set means vertex ``v`` is in the set. With the 64-vertex cap every
set fits one machine word, and Python ints give exact union/intersection/
difference for free.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(mask: int) -> list[int]:
    return list(iter_bits(mask))


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest(mask: int) -> int:
    """Index of the least set bit; -1 for the empty set."""
    return (mask & -mask).bit_length() - 1


def full(n: int) -> int:
    return (1 << n) - 1
