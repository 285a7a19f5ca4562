"""Truncated formal power series with polynomial coefficients.

A :class:`TruncSeries` stores the ordinary coefficients ``c_0, ..., c_N`` of a
series in ``t`` and never silently changes its order ``N``: binary
operations demand equal orders.

>>> t = TruncSeries.variable(4)
>>> g = t + t * t
>>> str(series_comp_inverse(g))
't - t^2 + 2*t^3 - 5*t^4'
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Union

from .coeffring import GradedPoly, format_rational

__all__ = [
    "TruncSeries",
    "SeriesError",
    "UnitError",
    "CompositionError",
    "InversionError",
    "series_arith",
    "series_compose",
    "series_comp_inverse",
    "series_coeff",
]

Coeff = Union[int, Fraction, GradedPoly]


class SeriesError(ValueError):
    pass


class UnitError(SeriesError):
    """The constant term of a series is not invertible."""


class CompositionError(SeriesError):
    """The inner series of a composition has a nonzero constant term."""


class InversionError(SeriesError):
    """A compositional inverse was requested for a series without a unit linear term."""


def _family(coeffs: Iterable[GradedPoly]) -> str:
    for c in coeffs:
        if not c.is_constant():
            return c.family
    return "a"


class TruncSeries:
    """Immutable series ``c_0 + c_1 t + ... + c_N t^N``."""

    __slots__ = ("coeffs", "family")

    def __init__(self, coeffs: Sequence[Coeff], order: int | None = None):
        polys = [GradedPoly.coerce(c) for c in coeffs]
        family = _family(polys)
        polys = [GradedPoly.coerce(c, family) if c.is_constant() else c for c in polys]
        if order is None:
            order = len(polys) - 1
        if order < 0:
            raise SeriesError("series order must be nonnegative")
        if len(polys) > order + 1:
            polys = polys[: order + 1]
        zero = GradedPoly({}, family)
        polys += [zero] * (order + 1 - len(polys))
        self.coeffs = tuple(polys)
        self.family = family

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([1], order)

    @classmethod
    def variable(cls, order: int) -> "TruncSeries":
        """The identity series ``t``."""
        return cls([0, 1], order)

    @classmethod
    def from_function(cls, fn, order: int) -> "TruncSeries":
        return cls([fn(i) for i in range(order + 1)], order)

    def __getitem__(self, k: int) -> GradedPoly:
        return self.coeffs[k]

    def _check(self, other: "TruncSeries"):
        if not isinstance(other, TruncSeries):
            raise TypeError("expected a TruncSeries")
        if other.order != self.order:
            raise SeriesError(f"order mismatch: {self.order} vs {other.order}")

    def _lift(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            self._check(other)
            return other
        return TruncSeries([other], self.order)

    def __add__(self, other):
        other = self._lift(other)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GradedPoly)):
            return TruncSeries([c * other for c in self.coeffs], self.order)
        other = self._lift(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = GradedPoly({}, self.family)
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return TruncSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return self * other.reciprocal()
        return TruncSeries([c / other for c in self.coeffs], self.order)

    def reciprocal(self) -> "TruncSeries":
        c0 = self.coeffs[0]
        if not c0.is_unit():
            raise UnitError(f"constant term {c0} is not invertible")
        inv0 = c0.inverse()
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = GradedPoly({}, self.family)
            for i in range(1, k + 1):
                if self.coeffs[i] and out[k - i]:
                    acc = acc + self.coeffs[i] * out[k - i]
            out.append(-(acc * inv0))
        return TruncSeries(out, self.order)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("series powers must be integers")
        if k < 0:
            return self.reciprocal() ** (-k)
        result = TruncSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self) -> "TruncSeries":
        """Multiply by ``t`` (the top coefficient falls off)."""
        return TruncSeries([0] + list(self.coeffs[:-1]), self.order)

    def divide_by_t(self) -> "TruncSeries":
        """Divide by ``t``; requires a zero constant term, pads with zero at the top."""
        if self.coeffs[0]:
            raise SeriesError("series is not divisible by t")
        return TruncSeries(list(self.coeffs[1:]) + [0], self.order)

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coeffs[: order + 1], order)

    def with_order(self, order: int) -> "TruncSeries":
        """Re-order explicitly, padding with zeros or truncating."""
        return TruncSeries(self.coeffs, order)

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        self._check(inner)
        if inner.coeffs[0]:
            raise CompositionError("inner series must have zero constant term")
        # Horner: f0 + g (f1 + g (f2 + ...))
        acc = TruncSeries([self.coeffs[-1]], self.order)
        for c in reversed(self.coeffs[:-1]):
            acc = acc * inner + TruncSeries([c], self.order)
        return acc

    def __call__(self, inner: "TruncSeries") -> "TruncSeries":
        return self.compose(inner)

    def map_coefficients(self, fn) -> "TruncSeries":
        return TruncSeries([fn(i, c) for i, c in enumerate(self.coeffs)], self.order)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        pieces = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            tk = "1" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if c.is_constant():
                q = c.constant_term()
                mag = abs(q)
                body = tk if (mag == 1 and k) else (format_rational(mag) if k == 0 else f"{format_rational(mag)}*{tk}")
                pieces.append(("-" if q < 0 else "+", body))
            else:
                pieces.append(("+", f"({c})" + ("" if k == 0 else f"*{tk}")))
        if not pieces:
            return "0"
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"TruncSeries({self}, order={self.order})"


def series_arith(f: TruncSeries, g: TruncSeries | None, op: str, k: int | None = None) -> TruncSeries:
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "pow":
        return f ** k
    raise ValueError(f"unknown series operation {op!r}")


def series_compose(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    return f.compose(g)


def _power_coefficients(b: List[GradedPoly], j: int, upto: int, cache: List[GradedPoly]) -> None:
    """Extend ``cache`` with coefficients of ``B(t)^j`` up to index ``upto``.

    J.C.P. Miller's recurrence; needs ``b[0]`` to be a unit.
    """
    inv0 = b[0].inverse()
    while len(cache) <= upto:
        m = len(cache)
        if m == 0:
            cache.append(b[0] ** j)
            continue
        acc = GradedPoly({}, b[0].family)
        for i in range(1, m + 1):
            w = (j + 1) * i - m
            if w and b[i] and cache[m - i]:
                acc = acc + b[i] * cache[m - i] * w
        cache.append(acc * inv0 / m)


def series_comp_inverse(g: TruncSeries) -> TruncSeries:
    """Compositional inverse by order-by-order solving of ``g(f(t)) = t``.

    The coefficient of ``t^k`` in ``g(f)`` is ``g_1 f_k`` plus terms that only
    involve ``f_1 .. f_{k-1}``; those come from the powers ``f^j``, ``j >= 2``,
    which are grown incrementally.
    """
    n = g.order
    if g.coeffs[0]:
        raise InversionError("series must have zero constant term")
    if n == 0:
        return TruncSeries([0], 0)
    g1 = g.coeffs[1]
    if not g1.is_unit():
        raise InversionError(f"linear coefficient {g1} is not invertible")
    inv1 = g1.inverse()
    fam = g.family
    f = [GradedPoly({}, fam), inv1]          # f_0, f_1
    b = [inv1]                               # f(t)/t
    powers = {j: [] for j in range(2, n + 1)}  # coefficients of (f/t)^j
    for k in range(2, n + 1):
        acc = GradedPoly({}, fam)
        for j in range(2, k + 1):
            if not g.coeffs[j]:
                continue
            _power_coefficients(b, j, k - j, powers[j])
            acc = acc + g.coeffs[j] * powers[j][k - j]
        fk = -(acc * inv1)
        f.append(fk)
        b.append(fk)
    return TruncSeries(f, n)


def series_coeff(f: TruncSeries, n: int) -> GradedPoly:
    if n < 0 or n > f.order:
        raise SeriesError(f"coefficient index {n} outside 0..{f.order}")
    return f.coeffs[n]
