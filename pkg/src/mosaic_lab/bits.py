"""Bitmask helpers: subsets of a carrier {0..n-1} are ints with bit i = element i."""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << x
    return m


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def elements(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


def full_mask(size: int) -> int:
    return (1 << size) - 1


def subsets(mask: int) -> Iterator[int]:
    """All subsets of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
