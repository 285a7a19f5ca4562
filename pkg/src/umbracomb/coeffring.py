"""Exact rationals and graded multivariate polynomials.

Every other module computes in :class:`GradedPoly`, a sparse polynomial in
one family of generators: the moments ``a_i``, the complete homogeneous
symmetric functions ``h_i`` or the commuting variables ``x_i``.  Generators
``a_i`` and ``h_i`` carry weight ``i``; ``x_i`` carries weight 1.

Scalars are :class:`fractions.Fraction`.

>>> a1, a2 = GradedPoly.gen(1), GradedPoly.gen(2)
>>> str((a1 + a2) * (a1 - a2))
'-a2^2 + a1^2'
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Callable, Dict, Iterable, Iterator, Mapping, Tuple, Union

__all__ = [
    "Rational",
    "FAMILIES",
    "FamilyError",
    "GradedPoly",
    "Monomial",
    "as_rational",
    "format_rational",
    "parse_rational",
    "ring_arith",
    "graded_truncate",
]

Rational = Fraction
FAMILIES = ("a", "h", "x")

# A monomial is a tuple of (generator index, exponent) pairs, sorted by index.
Monomial = Tuple[Tuple[int, int], ...]
Scalar = Union[int, Fraction]


class FamilyError(TypeError):
    """Raised when polynomials from different generator families are mixed."""


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1.

    >>> format_rational(Fraction(3, 2)), format_rational(Fraction(-4))
    ('3/2', '-4')
    """
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text)


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    out = dict(m1)
    for i, e in m2:
        out[i] = out.get(i, 0) + e
    return tuple(sorted(out.items()))


def _mono_sort_key(family: str, mono: Monomial):
    # weighted degree first; then a/h read as partitions (h3 > h2*h1 > h1^3),
    # x in lex order (x1^2 > x1*x2 > x2^2)
    weight = _weight(family, mono)
    if family == "x":
        return (-weight, [(i, -e) for i, e in mono])
    parts = []
    for i, e in reversed(mono):
        parts.extend([i] * e)
    return (-weight, [-p for p in parts])


def _weight(family: str, mono: Monomial) -> int:
    if family == "x":
        return sum(e for _, e in mono)
    return sum(i * e for i, e in mono)


class GradedPoly:
    """Immutable sparse polynomial over the rationals in one generator family.

    Terms map a :data:`Monomial` to a nonzero :class:`Fraction`.  Integers and
    fractions are accepted wherever a polynomial is, and constant polynomials
    combine with any family.
    """

    __slots__ = ("family", "_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None, family: str = "a"):
        if family not in FAMILIES:
            raise FamilyError(f"unknown generator family {family!r}")
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = as_rational(c)
                if c:
                    key = tuple(sorted((int(i), int(e)) for i, e in mono if e))
                    if any(i < 1 or e < 0 for i, e in key):
                        raise ValueError(f"bad monomial {mono!r}")
                    clean[key] = clean.get(key, Fraction(0)) + c
            clean = {m: c for m, c in clean.items() if c}
        self.family = family
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction], family: str) -> "GradedPoly":
        obj = cls.__new__(cls)
        obj.family = family
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def gen(cls, index: int, family: str = "a", power: int = 1) -> "GradedPoly":
        """The generator ``family_index`` raised to ``power``."""
        if index < 1:
            raise ValueError("generator indices start at 1")
        return cls({((index, power),): 1}, family)

    @classmethod
    def const(cls, c: Scalar, family: str = "a") -> "GradedPoly":
        return cls({(): c}, family)

    @classmethod
    def coerce(cls, value, family: str = "a") -> "GradedPoly":
        if isinstance(value, GradedPoly):
            return value
        return cls.const(as_rational(value), family)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self._terms.items(), key=lambda kv: _mono_sort_key(self.family, kv[0])))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(sorted(mono)), Fraction(0))

    def weight(self, mono: Monomial) -> int:
        return _weight(self.family, mono)

    def degree(self) -> int:
        """Largest weighted degree of a term; -1 for the zero polynomial."""
        return max((self.weight(m) for m in self._terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        weights = {self.weight(m) for m in self._terms}
        if d is None:
            return len(weights) <= 1
        return weights <= {d}

    def max_index(self) -> int:
        return max((i for m in self._terms for i, _ in m), default=0)

    # -- arithmetic -------------------------------------------------------

    def _family_with(self, other: "GradedPoly") -> str:
        if self.family == other.family:
            return self.family
        if other.is_constant():
            return self.family
        if self.is_constant():
            return other.family
        raise FamilyError(f"cannot combine family {self.family!r} with {other.family!r}")

    def _lift(self, other) -> "GradedPoly":
        if isinstance(other, GradedPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return GradedPoly.const(other, self.family)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        fam = self._family_with(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return GradedPoly._raw(out, fam)

    __radd__ = __add__

    def __neg__(self):
        return GradedPoly._raw({m: -c for m, c in self._terms.items()}, self.family)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return GradedPoly._raw({}, self.family)
            return GradedPoly._raw({m: c * other for m, c in self._terms.items()}, self.family)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        fam = self._family_with(other)
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return GradedPoly._raw({m: c for m, c in out.items() if c}, fam)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, GradedPoly):
            if not other.is_constant() or other.is_zero():
                raise ZeroDivisionError("can only divide by a nonzero constant")
            other = other.constant_term()
        other = as_rational(other)
        if not other:
            raise ZeroDivisionError("division by zero")
        return self * (1 / other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = GradedPoly.const(1, self.family)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def is_unit(self) -> bool:
        return self.is_constant() and not self.is_zero()

    def inverse(self) -> "GradedPoly":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit")
        return GradedPoly.const(1 / self.constant_term(), self.family)

    def truncate(self, d: int) -> "GradedPoly":
        """Drop every term of weighted degree greater than ``d``."""
        return GradedPoly._raw(
            {m: c for m, c in self._terms.items() if self.weight(m) <= d}, self.family
        )

    def homogeneous_part(self, d: int) -> "GradedPoly":
        return GradedPoly._raw(
            {m: c for m, c in self._terms.items() if self.weight(m) == d}, self.family
        )

    def map_coefficients(self, fn: Callable[[Fraction], Scalar]) -> "GradedPoly":
        return GradedPoly({m: fn(c) for m, c in self._terms.items()}, self.family)

    def substitute(self, images: Callable[[int], "GradedPoly"] | Mapping[int, "GradedPoly"],
                   family: str | None = None) -> "GradedPoly":
        """Ring homomorphism sending generator ``i`` to ``images[i]``."""
        lookup = images if callable(images) else images.__getitem__
        target = family or self.family
        cache: Dict[Tuple[int, int], GradedPoly] = {}
        total = GradedPoly({}, target)
        for mono, c in self._terms.items():
            term = GradedPoly.const(c, target)
            for i, e in mono:
                if (i, e) not in cache:
                    cache[(i, e)] = GradedPoly.coerce(lookup(i), target) ** e
                term = term * cache[(i, e)]
            total = total + term
        return total

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GradedPoly.const(other, self.family)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        if self._terms != other._terms:
            return False
        return self.family == other.family or self.is_constant()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- serialization ----------------------------------------------------

    def monomial_str(self, mono: Monomial, mul: str = "*") -> str:
        if not mono:
            return "1"
        # h-monomials read like partitions (h2*h1^2); a and x ascend (a1^2*a3)
        order = reversed(mono) if self.family == "h" else mono
        return mul.join(f"{self.family}{i}" + (f"^{e}" if e > 1 else "") for i, e in order)

    def to_dict(self) -> Dict[str, str]:
        """JSON-ready map from monomial strings to rational strings."""
        return {self.monomial_str(m): format_rational(c) for m, c in self.items()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping[str, str], family: str | None = None) -> "GradedPoly":
        terms: Dict[Monomial, Fraction] = {}
        fam = family
        for key, value in data.items():
            mono = []
            if key != "1":
                for factor in key.split("*"):
                    m = re.fullmatch(r"([ahx])(\d+)(?:\^(\d+))?", factor)
                    if m is None:
                        raise ValueError(f"bad monomial string {key!r}")
                    if fam is None:
                        fam = m.group(1)
                    elif fam != m.group(1):
                        raise FamilyError(f"mixed families in {key!r}")
                    mono.append((int(m.group(2)), int(m.group(3) or 1)))
            mono_key = tuple(sorted(_merge(mono)))
            terms[mono_key] = terms.get(mono_key, 0) + parse_rational(value)
        return cls(terms, fam or "a")

    @classmethod
    def from_json(cls, text: str, family: str | None = None) -> "GradedPoly":
        return cls.from_dict(json.loads(text), family)

    def __str__(self) -> str:
        return self.pretty()

    def pretty(self, coeff_sep: str = "*") -> str:
        """Human-readable form, e.g. ``h3 + 3*h2*h1 + h1^3``."""
        if not self._terms:
            return "0"
        pieces = []
        for mono, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = self.monomial_str(mono)
            else:
                body = f"{format_rational(mag)}{coeff_sep}{self.monomial_str(mono)}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"GradedPoly({self.pretty()!r}, family={self.family!r})"


def _merge(pairs: Iterable[Tuple[int, int]]) -> Iterable[Tuple[int, int]]:
    out: Dict[int, int] = {}
    for i, e in pairs:
        out[i] = out.get(i, 0) + e
    return out.items()


def ring_arith(p: GradedPoly, q: GradedPoly, op: str) -> GradedPoly:
    """Add, subtract or multiply two polynomials of the same family."""
    if p.family != q.family and not (p.is_constant() or q.is_constant()):
        raise FamilyError(f"family mismatch: {p.family!r} vs {q.family!r}")
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown ring operation {op!r}")


def graded_truncate(p: GradedPoly, d: int) -> GradedPoly:
    if d < 0:
        raise ValueError("truncation degree must be nonnegative")
    return p.truncate(d)
