"""Bitset helpers shared by the graph, isomorphism and search modules.

Vertex subsets are Python ints: bit ``i`` set means vertex ``i`` belongs.
"""

from typing import FrozenSet, Iterable, Iterator, List


def bit(v: int) -> int:
    """Mask with only vertex ``v`` set."""
    return 1 << v


def popcount(mask: int) -> int:
    """Number of vertices in ``mask``."""
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    """
    Yield the vertices of ``mask`` in ascending order.

    Examples:
        >>> list(iter_bits(0b10110))
        [1, 2, 4]
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_list(mask: int) -> List[int]:
    """Vertices of ``mask`` as an ascending list."""
    return list(iter_bits(mask))


def lowest_bit(mask: int) -> int:
    """Smallest vertex in a nonempty ``mask``."""
    return (mask & -mask).bit_length() - 1


def mask_of(vertices: Iterable[int]) -> int:
    """Mask containing every vertex in ``vertices``."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def full_mask(n: int) -> int:
    """Mask of all vertices ``0..n-1``."""
    return (1 << n) - 1


def members(mask: int) -> FrozenSet[int]:
    """Vertex set of ``mask`` as a frozenset (the public subset type)."""
    return frozenset(iter_bits(mask))
