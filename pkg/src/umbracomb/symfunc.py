"""Symmetric functions as polynomials in the complete homogeneous generators.

The ring of symmetric functions is the free commutative ring on
``h_1, h_2, ...``, so a symmetric function is simply a :class:`GradedPoly` of
family ``"h"``.  Elementary and monomial bases are reached by conversion.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Dict, Tuple

from .coeffring import GradedPoly
from .partitions import Partition, enumerate_partitions, falling_factorial
from .series import TruncSeries, series_comp_inverse

__all__ = [
    "SymFunc",
    "SymmetryError",
    "FaithfulnessError",
    "h",
    "h_mu",
    "e_in_h",
    "e_mu",
    "e_in_variables",
    "omega",
    "expand_in_variables",
    "identify_symmetric",
    "h_series",
    "pf",
    "pf_k",
    "pf_typeB",
    "hstar",
    "dimension",
]

SymFunc = GradedPoly


class SymmetryError(ValueError):
    """A polynomial in the x-variables is not symmetric."""


class FaithfulnessError(ValueError):
    """Too few variables to represent a symmetric function faithfully."""


def h(n: int) -> SymFunc:
    if n == 0:
        return GradedPoly.const(1, "h")
    return GradedPoly.gen(n, "h")


def h_mu(mu: Partition) -> SymFunc:
    return GradedPoly({tuple((p, m) for p, m in mu.multiplicities.items()): 1}, "h")


@lru_cache(maxsize=None)
def e_in_h(n: int) -> SymFunc:
    """e_n in h-coordinates, from H(t)E(-t) = 1.

    Comparing coefficients of t^n gives
    e_n = sum_{i=1..n} (-1)^(i-1) h_i e_{n-i}.

    >>> str(e_in_h(3))
    'h3 - 2*h2*h1 + h1^3'
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return GradedPoly.const(1, "h")
    acc = GradedPoly({}, "h")
    for i in range(1, n + 1):
        term = h(i) * e_in_h(n - i)
        acc = acc + (term if i % 2 else -term)
    return acc


def e_mu(mu: Partition) -> SymFunc:
    out = GradedPoly.const(1, "h")
    for p in mu:
        out = out * e_in_h(p)
    return out


def omega(f: SymFunc) -> SymFunc:
    """The involution h_n -> e_n, result in h-coordinates."""
    if f.is_constant():
        return f
    if f.family != "h":
        raise TypeError("omega acts on h-family polynomials")
    return f.substitute(e_in_h, "h")


@lru_cache(maxsize=None)
def _h_in_x(k: int, m: int) -> GradedPoly:
    terms: Dict[tuple, int] = {}
    for word in combinations_with_replacement(range(1, m + 1), k):
        mono = tuple(sorted(_counts(word).items()))
        terms[mono] = terms.get(mono, 0) + 1
    return GradedPoly(terms, "x")


@lru_cache(maxsize=None)
def e_in_variables(k: int, m: int) -> GradedPoly:
    return GradedPoly({tuple((i, 1) for i in word): 1 for word in combinations(range(1, m + 1), k)}, "x")


def _counts(word) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for i in word:
        out[i] = out.get(i, 0) + 1
    return out


def expand_in_variables(f: SymFunc, m: int) -> GradedPoly:
    """f(x_1, ..., x_m, 0, 0, ...) as an x-family polynomial."""
    if m < 1:
        raise ValueError("need at least one variable")
    if f.degree() > m:
        raise FaithfulnessError(f"{m} variables cannot represent degree {f.degree()} faithfully")
    if f.is_constant():
        return GradedPoly.const(f.constant_term(), "x")
    return f.substitute(lambda i: _h_in_x(i, m), "x")


def _exponent_vector(mono, m: int) -> Tuple[int, ...]:
    vec = [0] * m
    for i, e in mono:
        if i > m:
            raise SymmetryError(f"variable x{i} outside x1..x{m}")
        vec[i - 1] = e
    return tuple(vec)


def _is_symmetric(p: GradedPoly, m: int) -> bool:
    coeffs = {_exponent_vector(mono, m): c for mono, c in p.terms.items()}
    for j in range(m - 1):
        for vec, c in coeffs.items():
            swapped = list(vec)
            swapped[j], swapped[j + 1] = swapped[j + 1], swapped[j]
            if coeffs.get(tuple(swapped), 0) != c:
                return False
    return True


def identify_symmetric(p: GradedPoly, m: int, n: int) -> SymFunc:
    """The degree-``n`` symmetric function whose expansion in ``m`` variables is ``p``.

    Elimination is triangular: the lex-leading monomial ``x^lam`` of the
    remainder is cancelled by ``e_{lam'}``, whose lex-leading term is exactly
    ``x^lam``.
    """
    if m < n:
        raise FaithfulnessError(f"{m} variables cannot identify degree {n}")
    if p.is_zero():
        return GradedPoly({}, "h")
    if p.family != "x" and not p.is_constant():
        raise TypeError("expected an x-family polynomial")
    if not p.is_homogeneous(n):
        raise SymmetryError(f"input is not homogeneous of degree {n}")
    if not _is_symmetric(p, m):
        raise SymmetryError("input is not symmetric in the variables")
    remainder = {_exponent_vector(mono, m): c for mono, c in p.terms.items()}
    result = GradedPoly({}, "h")
    steps = 0
    while remainder:
        lead = max(remainder)
        c = remainder[lead]
        lam = list(lead)
        if lam != sorted(lam, reverse=True):
            raise ArithmeticError("lex-leading exponent of a symmetric polynomial is not a partition")
        lam_p = Partition(tuple(x for x in lam if x))
        conj = lam_p.conjugate()
        expansion = GradedPoly.const(1, "x")
        for k in conj:
            expansion = expansion * e_in_variables(k, m)
        for mono, d in expansion.terms.items():
            vec = _exponent_vector(mono, m)
            val = remainder.get(vec, 0) - c * d
            if val:
                remainder[vec] = val
            else:
                remainder.pop(vec, None)
        if lead in remainder:
            raise ArithmeticError("triangular elimination failed to cancel the leading term")
        result = result + e_mu(conj) * c
        steps += 1
        if steps > 10 ** 6:
            raise ArithmeticError("elimination did not terminate")
    return result


def h_series(order: int) -> TruncSeries:
    """H(t) = 1 + h_1 t + h_2 t^2 + ... truncated at ``order``."""
    return TruncSeries([h(i) for i in range(order + 1)], order)


def _pf_coefficients(n: int, basis) -> SymFunc:
    out = GradedPoly({}, "h")
    for mu in enumerate_partitions(n):
        c = Fraction(falling_factorial(n, mu.length - 1), mu.mult_factorial)
        out = out + basis(mu) * c
    return out


@lru_cache(maxsize=None)
def pf(n: int) -> SymFunc:
    """The parking function symmetric function.

    >>> str(pf(3))
    'h3 + 3*h2*h1 + h1^3'
    """
    if n < 1:
        raise ValueError("n must be positive")
    return _pf_coefficients(n, h_mu)


@lru_cache(maxsize=None)
def _pf_k_series(k: int, order: int) -> TruncSeries:
    t = TruncSeries.variable(order)
    return series_comp_inverse(t / h_series(order) ** k)


def pf_k(n: int, k: int) -> SymFunc:
    """Frobenius characteristic of the k-parking module, read off [t/H(t)^k]^<-1>."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    return _pf_k_series(k, n + 1)[n + 1]


@lru_cache(maxsize=None)
def pf_typeB(n: int) -> SymFunc:
    """[t^n] H(t)^n."""
    if n < 1:
        raise ValueError("n must be positive")
    return (h_series(n) ** n)[n]


def hstar(n: int, method: str = "series_inversion") -> SymFunc:
    """Macdonald's h_n^*, defined by z H^*(z) = [z H(z)]^<-1>.

    ``lagrange_formula`` uses the closed expansion over e_mu;
    ``series_inversion`` inverts z H(z) directly.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if method == "lagrange_formula":
        out = _pf_coefficients(n, e_mu)
        return out if n % 2 == 0 else -out
    if method == "series_inversion":
        z = TruncSeries.variable(n + 1)
        return series_comp_inverse(z * h_series(n + 1))[n + 1]
    raise ValueError(f"unknown hstar method {method!r}")


def dimension(f: SymFunc) -> Fraction:
    """Dimension of the representation with Frobenius characteristic f (h-basis).

    The permutation module with characteristic h_mu has dimension n!/mu!.
    """
    total = Fraction(0)
    for mono, c in f.terms.items():
        n = sum(i * e for i, e in mono)
        denom = math.prod(math.factorial(i) ** e for i, e in mono)
        total += c * math.factorial(n) / denom
    return total
