"""Classical umbral calculus over truncated moment sequences.

An umbra is a label bound to a sequence of moments ``a_1, ..., a_N``
(``a_0 = 1`` is implicit).  Formal polynomials in umbrae are
:class:`UmbralExpr` values; :func:`evaluate` applies the linear functional
``E``, which multiplies moments across distinct labels and never splits the
exponent of a single label.

Auxiliary umbrae (``n.alpha``, ``-alpha``, ``alpha_D``, ``alpha^<-1>``) are
memoized per source label, so two mentions of ``dot(n, alpha)`` denote the
same umbra.  Use :func:`similar` for an uncorrelated copy.

>>> alpha = new_umbra(MomentSeq.generic(4))
>>> str(evaluate(alpha * (alpha + dot(2, alpha))))
'a2 + 2*a1^2'
"""
from __future__ import annotations

import itertools
import math
import os
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Mapping, Tuple, Union

from .coeffring import GradedPoly
from .partitions import enumerate_partitions, falling_factorial
from .series import TruncSeries, series_comp_inverse
from .symfunc import e_in_h, e_in_variables, h

__all__ = [
    "DEFAULT_ORDER",
    "default_order",
    "TruncationError",
    "MomentSeq",
    "UmbraRef",
    "UmbralExpr",
    "UmbraRegistry",
    "new_umbra",
    "similar",
    "special_umbra",
    "evaluate",
    "umbral_equiv",
    "moments_of",
    "dot",
    "negate",
    "derivative",
    "comp_inverse_umbra",
    "umbra_to_genfun",
    "umbral_sub",
]

DEFAULT_ORDER = 12


def default_order() -> int:
    """Truncation order, overridable with ``UMBRACOMB_ORDER``."""
    raw = os.environ.get("UMBRACOMB_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    value = int(raw)
    if value < 1:
        raise ValueError("UMBRACOMB_ORDER must be positive")
    return value


class TruncationError(ValueError):
    """A power exceeds the number of moments an umbra carries."""


Coeff = Union[int, Fraction, GradedPoly]


@dataclass(frozen=True)
class MomentSeq:
    """Moments ``a_1 .. a_N``; index 0 always returns 1."""

    moments: Tuple[GradedPoly, ...]

    def __post_init__(self):
        object.__setattr__(self, "moments", tuple(GradedPoly.coerce(m) for m in self.moments))

    @property
    def order(self) -> int:
        return len(self.moments)

    def __getitem__(self, i: int) -> GradedPoly:
        if i == 0:
            return GradedPoly.const(1, self.family)
        if i < 0:
            raise IndexError(i)
        if i > self.order:
            raise TruncationError(f"moment {i} requested from a sequence of order {self.order}")
        return self.moments[i - 1]

    @property
    def family(self) -> str:
        for m in self.moments:
            if not m.is_constant():
                return m.family
        return "a"

    @classmethod
    def generic(cls, order: int | None = None, family: str = "a") -> "MomentSeq":
        """Indeterminate moments a_1, ..., a_N."""
        order = default_order() if order is None else order
        return cls(tuple(GradedPoly.gen(i, family) for i in range(1, order + 1)))

    @classmethod
    def from_function(cls, fn: Callable[[int], Coeff], order: int) -> "MomentSeq":
        return cls(tuple(GradedPoly.coerce(fn(i)) for i in range(1, order + 1)))

    @classmethod
    def from_genfun(cls, f: TruncSeries) -> "MomentSeq":
        """Moments of the umbra with exponential generating function ``f``."""
        if f.coeffs[0] != 1:
            raise ValueError("a generating function must start with 1")
        return cls(tuple(f.coeffs[i] * math.factorial(i) for i in range(1, f.order + 1)))

    def genfun(self) -> TruncSeries:
        """Ordinary series 1 + sum a_i t^i / i!."""
        coeffs = [GradedPoly.const(1, self.family)]
        coeffs += [m / math.factorial(i) for i, m in enumerate(self.moments, start=1)]
        return TruncSeries(coeffs, self.order)

    def truncate(self, order: int) -> "MomentSeq":
        if order > self.order:
            raise TruncationError(f"cannot extend order {self.order} to {order}")
        return MomentSeq(self.moments[:order])

    def to_dict(self) -> Dict[str, Dict[str, str]]:
        return {str(i): m.to_dict() for i, m in enumerate(self.moments, start=1)}


@dataclass(frozen=True)
class UmbraRef:
    """An umbral symbol.  Identity is the label; moments are shared data."""

    label: int
    moments: MomentSeq = field(compare=False, repr=False)
    name: str = field(default="", compare=False)

    @property
    def order(self) -> int:
        return self.moments.order

    def __str__(self):
        return self.name or f"u{self.label}"

    # arithmetic builds expressions
    def expr(self) -> "UmbralExpr":
        return UmbralExpr.of(self)

    def __add__(self, other):
        return self.expr() + other

    def __radd__(self, other):
        return UmbralExpr.lift(other) + self.expr()

    def __sub__(self, other):
        return self.expr() - other

    def __rsub__(self, other):
        return UmbralExpr.lift(other) - self.expr()

    def __mul__(self, other):
        return self.expr() * other

    def __rmul__(self, other):
        return UmbralExpr.lift(other) * self.expr()

    def __neg__(self):
        return -self.expr()

    def __pow__(self, k: int):
        return self.expr() ** k


# A monomial in umbrae: ((umbra, exponent), ...) sorted by label.
UMonomial = Tuple[Tuple[UmbraRef, int], ...]


def _umono_mul(m1: UMonomial, m2: UMonomial) -> UMonomial:
    if not m1:
        return m2
    if not m2:
        return m1
    out: Dict[UmbraRef, int] = dict(m1)
    for u, e in m2:
        out[u] = out.get(u, 0) + e
    return tuple(sorted(out.items(), key=lambda ue: ue[0].label))


class UmbralExpr:
    """A linear combination, with polynomial coefficients, of umbral monomials."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[UMonomial, Coeff] | None = None):
        clean: Dict[UMonomial, GradedPoly] = {}
        for mono, c in (terms or {}).items():
            c = GradedPoly.coerce(c)
            key = tuple(sorted(((u, e) for u, e in mono if e), key=lambda ue: ue[0].label))
            if c:
                clean[key] = clean[key] + c if key in clean else c
        self._terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def of(cls, umbra: UmbraRef) -> "UmbralExpr":
        return cls({((umbra, 1),): 1})

    @classmethod
    def lift(cls, value) -> "UmbralExpr":
        if isinstance(value, UmbralExpr):
            return value
        if isinstance(value, UmbraRef):
            return cls.of(value)
        return cls({(): GradedPoly.coerce(value)})

    @property
    def terms(self) -> Dict[UMonomial, GradedPoly]:
        return dict(self._terms)

    def labels(self) -> Dict[UmbraRef, int]:
        """Each umbra mentioned, with its largest exponent."""
        out: Dict[UmbraRef, int] = {}
        for mono in self._terms:
            for u, e in mono:
                out[u] = max(out.get(u, 0), e)
        return out

    def __add__(self, other):
        other = UmbralExpr.lift(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out[m] + c if m in out else c
        return UmbralExpr(out)

    __radd__ = __add__

    def __neg__(self):
        return UmbralExpr({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-UmbralExpr.lift(other))

    def __rsub__(self, other):
        return UmbralExpr.lift(other) + (-self)

    def __mul__(self, other):
        other = UmbralExpr.lift(other)
        out: Dict[UMonomial, GradedPoly] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _umono_mul(m1, m2)
                c = c1 * c2
                out[m] = out[m] + c if m in out else c
        return UmbralExpr(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return UmbralExpr({m: c / scalar for m, c in self._terms.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("umbral powers must be nonnegative integers")
        result = UmbralExpr.lift(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for mono, c in self._terms.items():
            body = "*".join(f"{u}" + (f"^{e}" if e > 1 else "") for u, e in mono) or "1"
            pieces.append(body if c == 1 else f"({c})*{body}")
        return " + ".join(pieces)

    def __repr__(self):
        return f"UmbralExpr({self})"


class UmbraRegistry:
    """Label generator plus the memo table for auxiliary umbrae.

    The only mutable state in the umbral engine; guarded by one lock.
    """

    def __init__(self):
        self._lock = threading.RLock()
        self._next = itertools.count(1)
        self._memo: Dict[tuple, UmbraRef] = {}

    def fresh(self, moments: MomentSeq, name: str = "") -> UmbraRef:
        with self._lock:
            return UmbraRef(next(self._next), moments, name)

    def memoized(self, key: tuple, build: Callable[[], Tuple[MomentSeq, str]]) -> UmbraRef:
        with self._lock:
            hit = self._memo.get(key)
            if hit is not None:
                return hit
        moments, name = build()
        with self._lock:
            hit = self._memo.get(key)
            if hit is None:
                hit = self._memo[key] = UmbraRef(next(self._next), moments, name)
            return hit


REGISTRY = UmbraRegistry()


def new_umbra(m: MomentSeq, name: str = "") -> UmbraRef:
    if m.order < 1:
        raise ValueError("an umbra needs at least one moment")
    return REGISTRY.fresh(m, name)


def similar(alpha: UmbraRef, name: str = "") -> UmbraRef:
    """A fresh umbra, uncorrelated with ``alpha``, carrying the same moments."""
    return REGISTRY.fresh(alpha.moments, name or f"{alpha}'")


def _bell_series(order: int) -> TruncSeries:
    # exp(e^t - 1) as exp composed with (e^t - 1)
    exp = TruncSeries([Fraction(1, math.factorial(i)) for i in range(order + 1)], order)
    return exp.compose(exp - 1)


def special_umbra(kind: str, order: int | None = None, n_vars: int | None = None) -> UmbraRef:
    """Augmentation, unity, singleton, Bell, eps_bar or theta_bar umbra.

    ``eps_bar`` has moments ``i! e_i`` and ``theta_bar`` has ``i! h_i``, both in
    h-coordinates.  With ``n_vars`` given, ``eps_bar`` instead uses the
    elementary symmetric polynomials in ``x_1 .. x_{n_vars}``.
    """
    order = default_order() if order is None else order
    if order < 1:
        raise ValueError("order must be positive")
    if kind == "augmentation":
        m = MomentSeq.from_function(lambda i: 0, order)
    elif kind == "unity":
        m = MomentSeq.from_function(lambda i: 1, order)
    elif kind == "singleton":
        m = MomentSeq.from_function(lambda i: 1 if i == 1 else 0, order)
    elif kind == "bell":
        m = MomentSeq.from_genfun(_bell_series(order))
    elif kind == "eps_bar":
        if n_vars is None:
            m = MomentSeq.from_function(lambda i: e_in_h(i) * math.factorial(i), order)
        else:
            m = MomentSeq.from_function(
                lambda i: e_in_variables(i, n_vars) * math.factorial(i) if i <= n_vars else 0, order
            )
    elif kind == "theta_bar":
        m = MomentSeq.from_function(lambda i: h(i) * math.factorial(i), order)
    else:
        raise ValueError(f"unknown special umbra {kind!r}")
    names = {"augmentation": "eps", "unity": "u", "singleton": "chi", "bell": "beta",
             "eps_bar": "eps_bar", "theta_bar": "theta_bar"}
    return new_umbra(m, names[kind])


def evaluate(expr) -> GradedPoly:
    """The evaluation functional E."""
    expr = UmbralExpr.lift(expr)
    total = None
    for mono, c in expr.terms.items():
        value = c
        for u, e in mono:
            if e > u.order:
                raise TruncationError(f"{u}^{e} exceeds moment order {u.order}")
            value = value * u.moments[e]
        total = value if total is None else total + value
    return total if total is not None else GradedPoly({})


def umbral_equiv(p, q) -> bool:
    return evaluate(p) == evaluate(q)


def moments_of(expr, order: int) -> MomentSeq:
    """Moments E[expr^k], k = 1..order: the umbra an expression represents."""
    expr = UmbralExpr.lift(expr)
    out = []
    power = UmbralExpr.lift(1)
    for _ in range(order):
        power = power * expr
        out.append(evaluate(power))
    return MomentSeq(tuple(out))


def _dot_moments_partition(n: int, m: MomentSeq) -> MomentSeq:
    # k-th moment of n.alpha: sum over lambda |- k of d_lambda (n)_l(lambda) a_lambda
    out = []
    for k in range(1, m.order + 1):
        acc = GradedPoly({}, m.family)
        for lam in enumerate_partitions(k):
            ff = falling_factorial(n, lam.length)
            if not ff:
                continue
            a_lam = GradedPoly.const(1, m.family)
            for part in lam:
                a_lam = a_lam * m[part]
            acc = acc + a_lam * (lam.d * ff)
        out.append(acc)
    return MomentSeq(tuple(out))


def dot_moments(n: int, m: MomentSeq, method: str = "auto") -> MomentSeq:
    """Moments of ``n.alpha`` for an umbra with moments ``m``.

    ``partition`` uses the sum over partitions (n >= 0 only); ``series``
    raises the generating function to the n-th power.
    """
    if method == "auto":
        method = "partition" if n >= 0 else "series"
    if method == "partition":
        if n < 0:
            raise ValueError("the partition formula needs n >= 0")
        return _dot_moments_partition(n, m)
    if method == "series":
        return MomentSeq.from_genfun(m.genfun() ** n)
    raise ValueError(f"unknown method {method!r}")


def dot(n: int, alpha: UmbraRef) -> UmbraRef:
    """The auxiliary umbra n.alpha, with generating function f(alpha, t)^n."""
    return REGISTRY.memoized(
        ("dot", alpha.label, n),
        lambda: (dot_moments(n, alpha.moments), f"{n}.{alpha}"),
    )


def negate(alpha: UmbraRef) -> UmbraRef:
    """-alpha: moments (-1)^i a_i."""
    return REGISTRY.memoized(
        ("neg", alpha.label, None),
        lambda: (MomentSeq(tuple(-m if i % 2 else m for i, m in enumerate(alpha.moments.moments, 1))),
                 f"-{alpha}"),
    )


def derivative(alpha: UmbraRef) -> UmbraRef:
    """alpha_D: i-th moment is i * a_{i-1}."""
    if alpha.order < 2:
        raise TruncationError("the derivative umbra needs order >= 2")
    m = alpha.moments
    return REGISTRY.memoized(
        ("D", alpha.label, None),
        lambda: (MomentSeq(tuple(m[i - 1] * i for i in range(1, m.order + 1))), f"({alpha})_D"),
    )


def comp_inverse_umbra(alpha: UmbraRef) -> UmbraRef:
    """alpha^<-1>, with f(alpha^<-1>, t) - 1 = [f(alpha, t) - 1]^<-1>."""

    def build():
        g = alpha.moments.genfun() - 1
        inv = series_comp_inverse(g)
        return MomentSeq.from_genfun(inv + 1), f"({alpha})^<-1>"

    return REGISTRY.memoized(("inv", alpha.label, None), build)


def umbra_to_genfun(alpha: UmbraRef) -> TruncSeries:
    return alpha.moments.genfun()


def umbral_sub(x, gamma: UmbraRef) -> UmbralExpr:
    """x - gamma, read as x + (-1.gamma)."""
    return UmbralExpr.lift(x) + dot(-1, gamma)
