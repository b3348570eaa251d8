"""Integer partitions and the combinatorial invariants attached to them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True, order=False)
class Partition:
    """A partition of ``n``, stored as a non-increasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be non-increasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts) -> "Partition":
        """Build from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"

    def blocks(self) -> list[tuple[int, int, int]]:
        """Slot blocks of equal part size as ``(part, start, stop)``, largest part first."""
        out = []
        start = 0
        for part, count in sorted(_counts(self.parts).items(), reverse=True):
            out.append((part, start, start + count))
            start += count
        return out


def _counts(parts):
    counts: dict[int, int] = {}
    for p in parts:
        counts[p] = counts.get(p, 0) + 1
    return counts


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order: ``[n]`` first, ``[1^n]`` last."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Partition(p) for p in _partitions(n, n)]


def length(nu: Partition) -> int:
    return len(nu.parts)


def multiplicity_symbol(nu: Partition) -> list[int]:
    """``[a_1, ..., a_n]`` with ``a_i`` the number of parts equal to ``i``."""
    a = [0] * nu.n
    for p in nu.parts:
        a[p - 1] += 1
    return a


def automorphism_order(nu: Partition) -> int:
    """Order of the block-permutation group, the product of ``a_i!``."""
    return math.prod(math.factorial(a) for a in multiplicity_symbol(nu))
