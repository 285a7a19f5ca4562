"""Integer partitions and the statistics the generating-function formulas use."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, List, Tuple

__all__ = [
    "Partition",
    "enumerate_partitions",
    "partition_stats",
    "falling_factorial",
    "add_part",
    "PartitionStats",
]


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts.

    >>> mu = Partition((2, 1, 1))
    >>> mu.length, mu.factorial, mu.mult_factorial, mu.d
    (3, 2, 2, 6)
    """

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if list(parts) != sorted(parts, reverse=True):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        return cls(tuple(sorted(parts, reverse=True)))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @cached_property
    def multiplicities(self) -> Dict[int, int]:
        return dict(Counter(self.parts))

    @property
    def distinct_parts(self) -> Tuple[int, ...]:
        return tuple(sorted(self.multiplicities, reverse=True))

    @cached_property
    def factorial(self) -> int:
        """mu! = mu_1! ... mu_l!"""
        return math.prod(math.factorial(p) for p in self.parts)

    @cached_property
    def mult_factorial(self) -> int:
        """m(mu)! = m_1! m_2! ..."""
        return math.prod(math.factorial(m) for m in self.multiplicities.values())

    @cached_property
    def d(self) -> int:
        return math.factorial(self.size) // (self.factorial * self.mult_factorial)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0])))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(t) for t in text.split(",")))


@dataclass(frozen=True)
class PartitionStats:
    length: int
    factorial: int
    mult_factorial: int
    d: int


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out: List[Tuple[int, ...]] = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> List[Partition]:
    """All partitions of ``n`` in lexicographically decreasing order.

    >>> [str(p) for p in enumerate_partitions(3)]
    ['3', '2,1', '1,1,1']
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions(n, n)]


def partition_stats(mu: Partition) -> PartitionStats:
    return PartitionStats(mu.length, mu.factorial, mu.mult_factorial, mu.d)


def falling_factorial(n: int, k: int) -> int:
    """n (n-1) ... (n-k+1); 1 when k = 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = 1
    for j in range(k):
        out *= n - j
    return out


def add_part(k: int, lam: Partition) -> Partition:
    """The partition obtained by inserting the part ``k`` into ``lam``."""
    if k < 1:
        raise ValueError("parts must be positive")
    return Partition.from_parts(lam.parts + (k,))
