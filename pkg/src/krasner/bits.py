"""Integer bitsets over a carrier ``{0, ..., n-1}``."""
from __future__ import annotations

from collections.abc import Iterable, Iterator


def mask(indexes: Iterable[int]) -> int:
    value = 0
    for idx in indexes:
        value |= 1 << idx
    return value


def members(value: int) -> tuple[int, ...]:
    out = []
    idx = 0
    while value:
        if value & 1:
            out.append(idx)
        value >>= 1
        idx += 1
    return tuple(out)


def iter_bits(value: int) -> Iterator[int]:
    while value:
        low = value & -value
        yield low.bit_length() - 1
        value ^= low


def popcount(value: int) -> int:
    return bin(value).count("1")


def full(n: int) -> int:
    return (1 << n) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def subsets(value: int) -> Iterator[int]:
    """All submasks of ``value``, in increasing numeric order."""
    bits = members(value)
    for k in range(1 << len(bits)):
        yield mask(b for i, b in enumerate(bits) if k >> i & 1)


def canonical_key(value: int) -> tuple[int, tuple[int, ...]]:
    """Sort key: cardinality first, then lexicographic on sorted members."""
    m = members(value)
    return (len(m), m)
