"""Noncrossing partition lattices, their chains and flag vectors.

Type B partitions live on ``[+-n]``; they are noncrossing with respect to the
circular order ``1, 2, ..., n, -1, -2, ..., -n`` and invariant under sign
change.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Dict, Iterator, List, Sequence, Tuple

from .coeffring import GradedPoly
from .symfunc import SymmetryError, identify_symmetric

__all__ = [
    "SetPartition",
    "FlagVectors",
    "GroundMismatch",
    "is_noncrossing",
    "is_noncrossing_B",
    "enumerate_set_partitions",
    "enumerate_nc",
    "refinement_leq",
    "rank",
    "covers",
    "maximal_chains",
    "iter_maximal_chains",
    "flag_vectors",
    "gessel_Q",
    "chain_symfunc",
]


class GroundMismatch(ValueError):
    pass


@dataclass(frozen=True)
class SetPartition:
    """Blocks of ``[n]`` (ground ``positive``) or ``[+-n]`` (ground ``signed``).

    Canonical form: each block sorted, blocks sorted by their minimum.
    """

    blocks: Tuple[Tuple[int, ...], ...]
    n: int
    ground: str = "positive"

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0]))
        object.__setattr__(self, "blocks", blocks)
        expected = set(self.ground_set())
        seen = [x for b in blocks for x in b]
        if any(not b for b in blocks) or len(seen) != len(set(seen)) or set(seen) != expected:
            raise ValueError(f"blocks {blocks} do not partition the ground set")

    def ground_set(self) -> List[int]:
        if self.ground == "positive":
            return list(range(1, self.n + 1))
        if self.ground == "signed":
            return list(range(-self.n, 0)) + list(range(1, self.n + 1))
        raise ValueError(f"unknown ground {self.ground!r}")

    @classmethod
    def minimum(cls, n: int, ground: str = "positive") -> "SetPartition":
        dummy = cls.__new__(cls)
        object.__setattr__(dummy, "n", n)
        object.__setattr__(dummy, "ground", ground)
        return cls(tuple((x,) for x in SetPartition.ground_set(dummy)), n, ground)

    @classmethod
    def maximum(cls, n: int, ground: str = "positive") -> "SetPartition":
        dummy = cls.__new__(cls)
        object.__setattr__(dummy, "n", n)
        object.__setattr__(dummy, "ground", ground)
        return cls((tuple(SetPartition.ground_set(dummy)),), n, ground)

    def block_sizes(self) -> List[int]:
        return [len(b) for b in self.blocks]

    def block_of(self) -> Dict[int, int]:
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    def is_sign_invariant(self) -> bool:
        as_sets = {frozenset(b) for b in self.blocks}
        return all(frozenset(-x for x in b) in as_sets for b in as_sets)

    def __str__(self) -> str:
        return "|".join(",".join(map(str, b)) for b in self.blocks)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "SetPartition":
        blocks = tuple(tuple(int(x) for x in part.split(",")) for part in text.split("|"))
        elems = [x for b in blocks for x in b]
        ground = "signed" if any(x < 0 for x in elems) else "positive"
        if n is None:
            n = max(abs(x) for x in elems)
        return cls(blocks, n, ground)


def _crossing(labels: Sequence[int]) -> bool:
    # labels[i] = block id of the i-th point in linear/circular order
    # a crossing is a < b < c < d with labels[a] == labels[c] != labels[b] == labels[d]
    positions: Dict[int, List[int]] = {}
    for i, lab in enumerate(labels):
        positions.setdefault(lab, []).append(i)
    blocks = list(positions.values())
    for b1, b2 in combinations(blocks, 2):
        for a, c in combinations(b1, 2):
            inside = [x for x in b2 if a < x < c]
            if inside and len(inside) < len(b2):
                return True
    return False


def is_noncrossing(pi: SetPartition) -> bool:
    """No h < l < k < m with h, k in one block and l, m in another.

    >>> is_noncrossing(SetPartition.parse("1,3|2,4")), is_noncrossing(SetPartition.parse("1,4|2,3"))
    (False, True)
    """
    if pi.ground == "signed":
        return is_noncrossing_B(pi)
    where = pi.block_of()
    return not _crossing([where[x] for x in range(1, pi.n + 1)])


def _circular_order(n: int) -> List[int]:
    return list(range(1, n + 1)) + [-x for x in range(1, n + 1)]


def is_noncrossing_B(pi: SetPartition) -> bool:
    """Sign-invariant and noncrossing on the circle 1..n, -1..-n."""
    if pi.ground != "signed":
        raise GroundMismatch("type B partitions live on the signed ground set")
    if not pi.is_sign_invariant():
        return False
    where = pi.block_of()
    return not _crossing([where[x] for x in _circular_order(pi.n)])


def enumerate_set_partitions(elements: Sequence[int]) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Set partitions of ``elements`` via restricted growth strings."""
    elements = list(elements)
    if not elements:
        yield ()
        return

    def rec(i: int, blocks: List[List[int]]):
        if i == len(elements):
            yield tuple(tuple(b) for b in blocks)
            return
        x = elements[i]
        for b in blocks:
            b.append(x)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([x])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(0, [])


def _nc_type_a(n: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    # noncrossing partitions of [n]: the block of 1 is {1} + S, and the gaps
    # between consecutive elements of that block are filled independently
    if n == 0:
        yield ()
        return

    def fill(lo: int, hi: int):
        # noncrossing partitions of the interval lo..hi
        if lo > hi:
            yield ()
            return
        rest = list(range(lo + 1, hi + 1))
        for r in range(len(rest) + 1):
            for others in combinations(rest, r):
                block = (lo,) + others
                bounds = list(block) + [hi + 1]
                gaps = [(bounds[i] + 1, bounds[i + 1] - 1) for i in range(len(block))]
                for parts in _product_fill(gaps):
                    yield (block,) + parts

    def _product_fill(gaps):
        if not gaps:
            yield ()
            return
        (lo, hi), tail = gaps[0], gaps[1:]
        for head in fill(lo, hi):
            for rest in _product_fill(tail):
                yield head + rest

    yield from fill(1, n)


def _sort_key(pi: SetPartition):
    return (len(pi.blocks), pi.blocks)



@lru_cache(maxsize=None)
def _enumerate_nc_cached(n: int, kind: str, k: int) -> Tuple[SetPartition, ...]:
    if kind == "A":
        parts = [SetPartition(b, n) for b in _nc_type_a(n)]
    elif kind == "k_divisible":
        parts = [SetPartition(b, k * n) for b in _nc_type_a(k * n)
                 if all(len(blk) % k == 0 for blk in b)]
    elif kind == "B":
        ground = _circular_order(n)
        parts = []
        for blocks in enumerate_set_partitions(ground):
            pi = SetPartition(blocks, n, "signed")
            if is_noncrossing_B(pi):
                parts.append(pi)
    else:
        raise ValueError(f"unknown noncrossing kind {kind!r}")
    return tuple(sorted(parts, key=_sort_key, reverse=True))


def enumerate_nc(n: int, kind: str = "A", k: int = 1) -> List[SetPartition]:
    """Noncrossing partitions of type A, k-divisible (of [kn]) or type B.

    Ordered by decreasing number of blocks (increasing rank), then by blocks.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if kind == "k_divisible" and k < 1:
        raise ValueError("k must be positive")
    return list(_enumerate_nc_cached(n, kind, k if kind == "k_divisible" else 1))


def refinement_leq(pi: SetPartition, sigma: SetPartition) -> bool:
    """Every block of ``pi`` sits inside a block of ``sigma``."""
    if pi.ground != sigma.ground or pi.n != sigma.n:
        raise GroundMismatch("partitions of different ground sets")
    where = sigma.block_of()
    return all(len({where[x] for x in b}) == 1 for b in pi.blocks)


def rank(pi: SetPartition) -> int:
    """Graded rank: n minus the number of blocks (type A).

    For type B the rank is n minus the number of pairs {B, -B} of
    non-self-conjugate blocks.
    """
    if pi.ground == "positive":
        return pi.n - len(pi.blocks)
    pairs = sum(1 for b in pi.blocks if frozenset(-x for x in b) != frozenset(b)) // 2
    return pi.n - pairs


@lru_cache(maxsize=None)
def _lattice(n: int, kind: str, k: int):
    elems = _enumerate_nc_cached(n, kind, k)
    index = {p: i for i, p in enumerate(elems)}
    leq = [[refinement_leq(p, q) for q in elems] for p in elems]
    m = len(elems)
    up: List[List[int]] = [[] for _ in range(m)]
    for i in range(m):
        above = [j for j in range(m) if j != i and leq[i][j]]
        for j in above:
            if not any(leq[t][j] for t in above if t != j):
                up[i].append(j)
    return elems, index, leq, up


def covers(pi: SetPartition, kind: str = "A") -> List[SetPartition]:
    """Elements covering ``pi`` in its noncrossing lattice."""
    n = pi.n
    elems, index, _, up = _lattice(n, kind, 1)
    return [elems[j] for j in up[index[pi]]]


def maximal_chains(n: int, kind: str = "A") -> int:
    """Number of maximal chains, by memoized descent over cover relations."""
    if kind not in ("A", "B"):
        raise ValueError("maximal chains are counted for types A and B")
    elems, index, _, up = _lattice(n, kind, 1)
    bottom = index[SetPartition.minimum(n, "positive" if kind == "A" else "signed")]
    top = index[SetPartition.maximum(n, "positive" if kind == "A" else "signed")]

    @lru_cache(maxsize=None)
    def count(i: int) -> int:
        if i == top:
            return 1
        return sum(count(j) for j in up[i])

    return count(bottom)


def iter_maximal_chains(n: int, kind: str = "A") -> Iterator[Tuple[SetPartition, ...]]:
    elems, index, _, up = _lattice(n, kind, 1)
    ground = "positive" if kind == "A" else "signed"
    top = index[SetPartition.maximum(n, ground)]

    def rec(path: List[int]):
        if path[-1] == top:
            yield tuple(elems[i] for i in path)
            return
        for j in up[path[-1]]:
            path.append(j)
            yield from rec(path)
            path.pop()

    yield from rec([index[SetPartition.minimum(n, ground)]])


def _subsets(universe: Sequence[int]) -> List[Tuple[int, ...]]:
    return [s for r in range(len(universe) + 1) for s in combinations(universe, r)]


@dataclass(frozen=True)
class FlagVectors:
    """Flag f-vector ``alpha`` and flag h-vector ``beta`` of NC_{n+1}, keyed by S in [n-1]."""

    n: int
    alpha: Dict[Tuple[int, ...], int]
    beta: Dict[Tuple[int, ...], int]

    def to_dict(self):
        key = lambda s: ",".join(map(str, s))
        return {
            "alpha": {key(s): str(v) for s, v in self.alpha.items()},
            "beta": {key(s): str(v) for s, v in self.beta.items()},
        }


def flag_vectors(n: int) -> FlagVectors:
    """Chain counts of NC_{n+1} by rank set, and their inclusion-exclusion transform."""
    if n < 1:
        raise ValueError("n must be positive")
    elems, _, leq, _ = _lattice(n + 1, "A", 1)
    by_rank: Dict[int, List[int]] = {}
    for i, p in enumerate(elems):
        by_rank.setdefault(rank(p), []).append(i)
    bottom, top = by_rank[0][0], by_rank[n][0]
    alpha: Dict[Tuple[int, ...], int] = {}
    for s in _subsets(range(1, n)):
        # paths bottom -> rank s_1 -> ... -> top along the order relation
        ways = {bottom: 1}
        for r in list(s) + [n]:
            ways = {
                j: sum(w for i, w in ways.items() if leq[i][j])
                for j in by_rank[r]
            }
        alpha[s] = ways[top]
    beta = {
        s: sum((-1) ** (len(s) - len(t)) * alpha[t] for t in _subsets(s))
        for s in alpha
    }
    return FlagVectors(n, alpha, beta)


def gessel_Q(S: Sequence[int], n: int, m: int) -> GradedPoly:
    """Gessel's fundamental quasisymmetric function in ``m`` variables.

    Sum over i_1 <= ... <= i_n in [m], strict at the positions in S.
    """
    if m < n:
        raise ValueError("need at least n variables")
    strict = set(S)
    if not strict <= set(range(1, n)):
        raise ValueError(f"S must be a subset of 1..{n - 1}")
    terms: Dict[tuple, int] = {}
    for word in combinations_with_replacement(range(1, m + 1), n):
        if all(word[j - 1] < word[j] for j in strict):
            counts: Dict[int, int] = {}
            for i in word:
                counts[i] = counts.get(i, 0) + 1
            mono = tuple(sorted(counts.items()))
            terms[mono] = terms.get(mono, 0) + 1
    return GradedPoly(terms, "x")


def chain_symfunc(n: int) -> GradedPoly:
    """F_{NC_{n+1}} = sum_S beta(S) Q_S, identified in h-coordinates."""
    fv = flag_vectors(n)
    total = GradedPoly({}, "x")
    for s, b in fv.beta.items():
        if b:
            total = total + gessel_Q(s, n, n) * b
    try:
        return identify_symmetric(total, n, n)
    except SymmetryError as exc:
        raise ArithmeticError(f"flag h-vector of NC_{n + 1} gives a non-symmetric function") from exc
