"""Integer partitions: exact, deterministic, tuple-based.

A partition is a tuple of weakly decreasing positive ints; the empty tuple is
the partition of 0.  Enumeration order is reverse lexicographic, so (n) comes
first and (1,...,1) last, which refines dominance.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

Partition = tuple[int, ...]
BiPartition = tuple[Partition, Partition]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate an iterable of parts and return it as a partition tuple."""
    p = tuple(int(x) for x in parts)
    if any(x < 1 for x in p):
        raise ValueError(f"parts must be positive: {p!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {p!r}")
    return p


def transpose(p: Partition) -> Partition:
    """Conjugate diagram: the column lengths of p."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > i) for i in range(p[0]))


def dominance_leq(a: Partition, b: Partition) -> bool:
    """Dominance order: every partial sum of a is at most that of b.

    Only partitions of the same size are comparable.
    """
    if sum(a) != sum(b):
        raise ValueError("incomparable sizes")
    ta = tb = 0
    for i in range(max(len(a), len(b))):
        ta += a[i] if i < len(a) else 0
        tb += b[i] if i < len(b) else 0
        if ta > tb:
            return False
    return True


def _descending(rem: int, maxpart: int) -> Iterator[Partition]:
    if rem == 0:
        yield ()
        return
    for k in range(min(rem, maxpart), 0, -1):
        for rest in _descending(rem - k, k):
            yield (k,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(_descending(n, n))


@lru_cache(maxsize=None)
def distinct_partitions_of(n: int) -> tuple[Partition, ...]:
    """Partitions of n with pairwise distinct parts, same order."""
    return tuple(p for p in partitions_of(n) if len(set(p)) == len(p))


def multiplicities(p: Partition) -> dict[int, int]:
    m: dict[int, int] = {}
    for x in p:
        m[x] = m.get(x, 0) + 1
    return m


def contains(outer: Partition, inner: Partition) -> bool:
    """Diagram containment: inner fits inside outer row by row."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))
