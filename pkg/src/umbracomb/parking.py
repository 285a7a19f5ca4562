"""Parking functions, volume polynomials and Abel polynomials.

Volume polynomials are handled as :class:`TypeAggregate` values: the
coefficient of ``x^mu`` collects every monomial whose sorted exponent vector
is ``mu``.  That is all that survives evaluation at uncorrelated similar
umbrae, and it is the level at which the closed forms hold.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, Iterator, List, Mapping, Sequence, Tuple

from .coeffring import GradedPoly, format_rational, parse_rational
from .partitions import Partition, enumerate_partitions, falling_factorial
from .umbral import MomentSeq, TruncationError, UmbraRef, UmbralExpr, dot

__all__ = [
    "ParkingFunction",
    "TypeAggregate",
    "is_parking",
    "enumerate_parking",
    "count_parking",
    "orbit_representatives",
    "volume_poly",
    "volume_umbral",
    "volume_scalar",
    "abel_poly",
    "catalan",
]


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def _bound(kind: str, k: int, n: int):
    if kind == "classical":
        return lambda j: j
    if kind == "k_parking":
        if k < 1:
            raise ValueError("k must be positive")
        return lambda j: k * j
    if kind == "type_B":
        return lambda j: n
    raise ValueError(f"unknown parking kind {kind!r}")


@dataclass(frozen=True)
class ParkingFunction:
    entries: Tuple[int, ...]
    kind: str = "classical"
    k: int = 1

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not is_parking(self.entries, self.kind, self.k):
            raise ValueError(f"{self.entries} is not a {self.kind} parking function")

    def __len__(self):
        return len(self.entries)

    def content(self) -> Partition:
        """Sorted multiplicities of the entries: the exponent multiset of x_p."""
        counts: Dict[int, int] = {}
        for p in self.entries:
            counts[p] = counts.get(p, 0) + 1
        return Partition.from_parts(counts.values())


def is_parking(p: Sequence[int], kind: str = "classical", k: int = 1) -> bool:
    """Whether the nondecreasing rearrangement of ``p`` satisfies the kind's bound.

    >>> is_parking((2, 1, 1)), is_parking((2, 2)), is_parking((3, 1), "k_parking", 2)
    (True, False, True)
    """
    if len(p) == 0:
        raise ValueError("parking functions have positive length")
    if any(x < 1 for x in p):
        raise ValueError("entries must be positive integers")
    bound = _bound(kind, k, len(p))
    return all(x <= bound(j) for j, x in enumerate(sorted(p), start=1))


def _nondecreasing(n: int, bound) -> Iterator[Tuple[int, ...]]:
    def rec(prefix: List[int]):
        j = len(prefix) + 1
        if j > n:
            yield tuple(prefix)
            return
        lo = prefix[-1] if prefix else 1
        for v in range(lo, bound(j) + 1):
            prefix.append(v)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def _distinct_permutations(seq: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    counts: Dict[int, int] = {}
    for x in seq:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)
    n = len(seq)
    out: List[int] = []

    def rec():
        if len(out) == n:
            yield tuple(out)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                out.append(key)
                yield from rec()
                out.pop()
                counts[key] += 1

    yield from rec()


def enumerate_parking(n: int, kind: str = "classical", k: int = 1) -> List[ParkingFunction]:
    """All parking functions of length ``n``, in lexicographic order.

    Classical and k-parking functions are generated from their nondecreasing
    representatives; type B functions are all of ``[n]^n``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if kind == "type_B":
        words = product(range(1, n + 1), repeat=n)
    else:
        bound = _bound(kind, k, n)
        words = (w for rep in _nondecreasing(n, bound) for w in _distinct_permutations(rep))
    return [ParkingFunction(w, kind, k) for w in sorted(words)]


def count_parking(n: int, kind: str = "classical", k: int = 1) -> int:
    return len(enumerate_parking(n, kind, k))


def orbit_representatives(n: int, kind: str = "classical", k: int = 1) -> List[ParkingFunction]:
    """One nondecreasing parking function per orbit of the permutation action."""
    if n < 1:
        raise ValueError("n must be positive")
    bound = _bound(kind, k, n)
    return [ParkingFunction(rep, kind, k) for rep in _nondecreasing(n, bound)]


class TypeAggregate(Mapping[Partition, Fraction]):
    """Partition-indexed coefficients of a polynomial in exchangeable variables.

    Iterates partitions in decreasing lexicographic order.
    """

    def __init__(self, coeffs: Mapping[Partition, Fraction]):
        self._c = {mu: Fraction(c) for mu, c in coeffs.items() if c}

    def __getitem__(self, mu: Partition) -> Fraction:
        return self._c[mu]

    def __iter__(self):
        return iter(sorted(self._c, reverse=True))

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if isinstance(other, TypeAggregate):
            return self._c == other._c
        if isinstance(other, Mapping):
            return self._c == {mu: Fraction(c) for mu, c in other.items() if c}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def scale(self, c) -> "TypeAggregate":
        return TypeAggregate({mu: v * c for mu, v in self._c.items()})

    def evaluate(self, moment: Callable[[int], GradedPoly], family: str = "a") -> GradedPoly:
        """sum_mu c_mu * prod_i moment(mu_i)."""
        total = GradedPoly({}, family)
        for mu in self:
            term = GradedPoly.const(self._c[mu], family)
            for part in mu:
                term = term * moment(part)
            total = total + term
        return total

    def to_dict(self) -> Dict[str, str]:
        return {str(mu): format_rational(self._c[mu]) for mu in self}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping[str, str]) -> "TypeAggregate":
        return cls({Partition.parse(k): parse_rational(v) for k, v in data.items()})

    @classmethod
    def from_json(cls, text: str) -> "TypeAggregate":
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return f"TypeAggregate({self.to_dict()})"


def _kind_name(kind: str) -> str:
    kind = kind.upper()
    if kind not in ("A", "B"):
        raise ValueError(f"volume polynomial type must be A or B, not {kind!r}")
    return kind


def volume_poly(n: int, kind: str = "A", method: str = "closed_form") -> TypeAggregate:
    """The n-volume polynomial (type A) or its type-B analogue, aggregated by exponent multiset.

    >>> volume_poly(2, "A", "definition").to_dict()
    {'2': '1/2', '1,1': '1'}
    """
    kind = _kind_name(kind)
    if n < 1:
        raise ValueError("n must be positive")
    if method == "definition":
        pk = "classical" if kind == "A" else "type_B"
        coeffs: Dict[Partition, Fraction] = {}
        weight = Fraction(1, math.factorial(n))
        for p in enumerate_parking(n, pk):
            mu = p.content()
            coeffs[mu] = coeffs.get(mu, 0) + weight
        return TypeAggregate(coeffs)
    if method == "closed_form":
        shift = 1 if kind == "A" else 0
        return TypeAggregate({
            mu: Fraction(falling_factorial(n, mu.length - shift), mu.mult_factorial * mu.factorial)
            for mu in enumerate_partitions(n)
        })
    raise ValueError(f"unknown volume method {method!r}")


def volume_umbral(n: int, kind: str, m: MomentSeq) -> GradedPoly:
    """E[V_n(alpha_1, ..., alpha_n)] for uncorrelated umbrae with moments ``m``."""
    if m.order < n:
        raise TruncationError(f"need moments up to order {n}, have {m.order}")
    return volume_poly(n, kind, "closed_form").evaluate(lambda i: m[i], m.family)


def volume_scalar(n: int, kind: str, a) -> Fraction:
    """V_n(a, ..., a) for a rational ``a``."""
    a = Fraction(a)
    agg = volume_poly(n, kind, "closed_form")
    return sum((c * a ** n for c in agg.values()), Fraction(0))


def abel_poly(n: int, x: UmbraRef, alpha: UmbraRef, kind: str = "A") -> UmbralExpr:
    """A_n(x, alpha) = x (x - n.alpha)^(n-1), or B_n(x, alpha) = (x - (n+1).alpha)^n.

    Umbral subtraction ``x - gamma`` is ``x + (-1.gamma)``.
    """
    kind = _kind_name(kind)
    if n < 1:
        raise ValueError("n must be positive")
    if kind == "A":
        shifted = x + dot(-1, dot(n, alpha))
        return x * shifted ** (n - 1)
    shifted = x + dot(-1, dot(n + 1, alpha))
    return shifted ** n
