"""Brute-force oracles, independent of the code paths they check."""
from __future__ import annotations

from collections import Counter
from itertools import combinations, product

from umbracomb.coeffring import GradedPoly


def partitions_brute(n):
    """Weakly decreasing compositions of n, found by filtering all compositions."""
    out = set()
    for length in range(1, n + 1):
        for parts in product(range(1, n + 1), repeat=length):
            if sum(parts) == n and list(parts) == sorted(parts, reverse=True):
                out.add(parts)
    return out if n else {()}


def set_partitions_brute(elements):
    """Set partitions by assigning each element a block label and canonicalizing."""
    elements = list(elements)
    seen = set()
    for labels in product(range(len(elements)), repeat=len(elements)):
        blocks = {}
        for x, lab in zip(elements, labels):
            blocks.setdefault(lab, []).append(x)
        seen.add(frozenset(frozenset(b) for b in blocks.values()))
    return seen


def crosses(blocks, order):
    pos = {x: i for i, x in enumerate(order)}
    for b1, b2 in combinations(blocks, 2):
        for h, k in combinations(sorted(pos[x] for x in b1), 2):
            for l, m in combinations(sorted(pos[x] for x in b2), 2):
                if h < l < k < m or l < h < m < k:
                    return True
    return False


def frobenius_of_words(words):
    """Characteristic of the permutation action on a set of words: one h_content per orbit."""
    reps = {tuple(sorted(w)) for w in words}
    total = GradedPoly({}, "h")
    for rep in reps:
        content = sorted(Counter(rep).values(), reverse=True)
        mono = Counter(content)
        total = total + GradedPoly({tuple(sorted(mono.items())): 1}, "h")
    return total


def parking_brute(n, bound):
    return [p for p in product(range(1, n * max(bound(j) for j in range(1, n + 1)) + 1), repeat=n)
            if all(x <= bound(j) for j, x in enumerate(sorted(p), 1))]


def poly_from_x_dict(d):
    """Build an x-family polynomial from {exponent tuple: coefficient}."""
    return GradedPoly({tuple((i + 1, e) for i, e in enumerate(vec) if e): c for vec, c in d.items()}, "x")
