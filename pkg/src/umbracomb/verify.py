"""Identity checks grouped into suites, and a deterministic runner.

Each check is a function of keyword parameters returning ``(left, right)``;
both sides are serialized and compared as strings, so a pass means exact
equality.  Checks clamp ``n`` to their desk-scale bound and report the
clamped parameters.
"""
from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Tuple

from .coeffring import GradedPoly, format_rational
from .noncrossing import (
    enumerate_nc,
    enumerate_set_partitions,
    flag_vectors,
    chain_symfunc,
    is_noncrossing,
    maximal_chains,
    SetPartition,
)
from .parking import (
    catalan,
    count_parking,
    is_parking,
    orbit_representatives,
    volume_poly,
    volume_scalar,
    volume_umbral,
    abel_poly,
)
from .partitions import enumerate_partitions
from .series import TruncSeries
from .symfunc import dimension, h, h_mu, h_series, hstar, omega, pf, pf_k, pf_typeB
from .umbral import (
    MomentSeq,
    comp_inverse_umbra,
    derivative,
    dot,
    evaluate,
    moments_of,
    negate,
    new_umbra,
    similar,
    special_umbra,
    umbra_to_genfun,
)

__all__ = ["CheckReport", "SUITES", "CHECKS", "run_suite", "run_check", "plan"]

SUITES = ("counts", "symfunc", "umbral", "volume", "flags", "typeb")


@dataclass
class CheckReport:
    name: str
    params: Dict[str, int]
    status: str
    left: str | None = None
    right: str | None = None
    elapsed_ms: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timing: bool = False) -> dict:
        out = {"check": self.name, "params": dict(self.params), "status": self.status}
        if not self.passed:
            out["left"] = self.left
            out["right"] = self.right
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    def line(self, timing: bool = False) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        text = f"{self.status.upper():4}  {self.name}  {params}".rstrip()
        if timing:
            text += f"  ({self.elapsed_ms:.1f} ms)"
        if not self.passed:
            text += f"\n      left:  {self.left}\n      right: {self.right}"
        return text


def _ser(value) -> str:
    if isinstance(value, GradedPoly):
        return value.to_json()
    if isinstance(value, TruncSeries):
        return "[" + ",".join(c.to_json() for c in value.coeffs) + "]"
    if isinstance(value, MomentSeq):
        return "[" + ",".join(c.to_json() for c in value.moments) + "]"
    if isinstance(value, Fraction):
        return format_rational(value)
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_ser(v) for v in value) + "]"
    return str(value)


# -- counts ----------------------------------------------------------------

def _park_count(n):
    return count_parking(n), (n + 1) ** (n - 1)


def _orbit_count(n):
    return len(orbit_representatives(n)), catalan(n)


def _typeb_count(n):
    return count_parking(n, "type_B"), n ** n


def _nc_count(n):
    return len(enumerate_nc(n)), catalan(n)


def _nc_bruteforce(n):
    found = sum(1 for b in enumerate_set_partitions(range(1, n + 1)) if is_noncrossing(SetPartition(b, n)))
    return len(enumerate_nc(n)), found


def _nc_k_count(n, k):
    brute = sum(
        1 for b in enumerate_set_partitions(range(1, k * n + 1))
        if all(len(blk) % k == 0 for blk in b) and is_noncrossing(SetPartition(b, k * n))
    )
    return len(enumerate_nc(n, "k_divisible", k)), brute


def _nc_b_count(n):
    return len(enumerate_nc(n, "B")), math.comb(2 * n, n)


def _nc_chains(n):
    return maximal_chains(n, "A"), Fraction(n) ** (n - 2)


def _nc_b_chains(n):
    return maximal_chains(n, "B"), n ** n


def _k_parking_dimension(n, k):
    brute = sum(1 for p in product(range(1, k * n + 1), repeat=n) if is_parking(p, "k_parking", k))
    return dimension(pf_k(n, k)), brute


# -- symmetric functions ---------------------------------------------------

def _pf_dimension(n):
    return dimension(pf(n)), (n + 1) ** (n - 1)


def _pf_typeb_dimension(n):
    return dimension(pf_typeB(n)), n ** n


def _stanley(order, k):
    t = TruncSeries.variable(order)
    tpf = t + sum((TruncSeries([0] * (i + 1) + [pf_k(i, k) if k > 1 else pf(i)], order)
                   for i in range(1, order)), TruncSeries([0], order))
    return tpf.compose(t / h_series(order) ** k), t


def _hstar_agree(n):
    return hstar(n, "series_inversion"), hstar(n, "lagrange_formula")


def _hstar_omega(n):
    return omega(hstar(n)) * (-1) ** n, pf(n)


def _hstar_volume(n):
    neg_eps = negate(special_umbra("eps_bar", n))
    return volume_umbral(n, "A", neg_eps.moments), hstar(n)


def _omega_involution(n):
    f = sum((h_mu(mu) * (i + 1) for i, mu in enumerate(enumerate_partitions(n))), GradedPoly({}, "h"))
    return omega(omega(f)), f


# -- umbral engine ---------------------------------------------------------

def _inverse_law(order):
    alpha = new_umbra(MomentSeq.generic(order))
    return umbra_to_genfun(alpha) * umbra_to_genfun(dot(-1, alpha)), TruncSeries.one(order)


def _derivative_law(order):
    alpha = new_umbra(MomentSeq.generic(order))
    f = umbra_to_genfun(alpha)
    return umbra_to_genfun(derivative(alpha)), f.shift() + 1


def _bell_moments(order):
    beta = special_umbra("bell", order)
    brute = [sum(1 for _ in enumerate_set_partitions(range(i))) for i in range(1, order + 1)]
    return beta.moments, MomentSeq.from_function(lambda i: brute[i - 1], order)


def _singleton_genfun(order):
    return umbra_to_genfun(special_umbra("singleton", order)), TruncSeries([1, 1], order)


def _theta_bar(order):
    theta = special_umbra("theta_bar", order)
    eps = special_umbra("eps_bar", order)
    return dot(-1, negate(eps)).moments, theta.moments


def _dot_additivity(m, n, order):
    alpha = new_umbra(MomentSeq.generic(order))
    left = moments_of(dot(m, alpha) + similar(dot(n, alpha)), order)
    return left, dot(m + n, alpha).moments


def _dot_methods(n, order):
    from .umbral import dot_moments
    m = MomentSeq.generic(order)
    return dot_moments(n, m, "partition"), dot_moments(n, m, "series")


def _abel_subtraction(n):
    alpha = new_umbra(MomentSeq.generic(n + 1))
    left = evaluate(abel_poly(n, alpha, dot(-1, alpha), "A"))
    return left, evaluate(alpha * (alpha + dot(n, alpha)) ** (n - 1))


# -- volume polynomials ----------------------------------------------------

def _volume_closed_form(n, kind):
    return volume_poly(n, kind, "definition"), volume_poly(n, kind, "closed_form")


def _main_theorem(n):
    alpha = new_umbra(MomentSeq.generic(n))
    left = volume_umbral(n, "A", alpha.moments) * math.factorial(n)
    return left, evaluate(alpha * (alpha + dot(n, alpha)) ** (n - 1))


def _theorem4(n):
    return volume_umbral(n, "A", special_umbra("theta_bar", n).moments), pf(n)


def _remark_substitution(n):
    agg = volume_poly(n, "A", "closed_form")
    # x^mu -> x_mu, then x_i -> i! h_i
    return agg.evaluate(lambda i: h(i) * math.factorial(i), "h"), pf(n)


def _eq_id1(n):
    alpha = new_umbra(MomentSeq.generic(n + 1))
    gamma = comp_inverse_umbra(derivative(dot(-1, alpha)))
    left = volume_umbral(n, "A", alpha.moments) * math.factorial(n)
    return left, evaluate(gamma ** (n + 1)) / (n + 1)


def _k_parking_theorem(n, k):
    theta = special_umbra("theta_bar", n)
    return volume_umbral(n, "A", dot(k, theta).moments), pf_k(n, k)


def _scalar_remark(n, seed):
    rng = random.Random(seed)
    lefts, rights = [], []
    for _ in range(5):
        a = Fraction(rng.randint(-50, 50), rng.randint(1, 30))
        lefts.append(volume_scalar(n, "A", a) * math.factorial(n))
        rights.append(a * (a + n * a) ** (n - 1))
    return lefts, rights


# -- flags -----------------------------------------------------------------

def _flag_omega(n):
    return omega(chain_symfunc(n)), pf(n)


def _flag_volume(n):
    return volume_umbral(n, "A", special_umbra("eps_bar", n).moments), chain_symfunc(n)


def _flag_inverse(n):
    fv = flag_vectors(n)
    rebuilt = {s: sum(b for t, b in fv.beta.items() if set(t) <= set(s)) for s in fv.alpha}
    return sorted(rebuilt.items()), sorted(fv.alpha.items())


def _flag_maximal(n):
    fv = flag_vectors(n)
    return fv.alpha[tuple(range(1, n))], (n + 1) ** (n - 1)


# -- type B ----------------------------------------------------------------

def _typeb_dot_power(n):
    theta = special_umbra("theta_bar", n)
    return pf_typeB(n) * math.factorial(n), evaluate(dot(n, theta) ** n)


def _typeb_abel(n):
    theta = special_umbra("theta_bar", n + 1)
    x = dot(-1, theta)
    return pf_typeB(n) * math.factorial(n), evaluate(abel_poly(n, x, x, "B"))


def _typeb_volume(n):
    theta = special_umbra("theta_bar", n)
    return pf_typeB(n) * math.factorial(n), volume_umbral(n, "B", theta.moments) * math.factorial(n)


def _typeb_chain(n):
    theta = special_umbra("theta_bar", n)
    left = moments_of(dot(-1, theta) + dot(n + 1, theta), n)
    return left, dot(n, theta).moments


# name -> (suite, function)
CHECKS: Dict[str, Tuple[str, Callable]] = {
    "park_count": ("counts", _park_count),
    "orbit_count": ("counts", _orbit_count),
    "typeb_count": ("counts", _typeb_count),
    "nc_count": ("counts", _nc_count),
    "nc_bruteforce": ("counts", _nc_bruteforce),
    "nc_k_count": ("counts", _nc_k_count),
    "nc_b_count": ("counts", _nc_b_count),
    "nc_chains": ("counts", _nc_chains),
    "nc_b_chains": ("counts", _nc_b_chains),
    "k_parking_dimension": ("counts", _k_parking_dimension),
    "pf_dimension": ("symfunc", _pf_dimension),
    "pf_typeb_dimension": ("symfunc", _pf_typeb_dimension),
    "stanley_st1": ("symfunc", lambda order: _stanley(order, 1)),
    "stanley_st2": ("symfunc", _stanley),
    "hstar_methods": ("symfunc", _hstar_agree),
    "hstar_omega": ("symfunc", _hstar_omega),
    "hstar_volume": ("symfunc", _hstar_volume),
    "omega_involution": ("symfunc", _omega_involution),
    "inverse_law": ("umbral", _inverse_law),
    "derivative_law": ("umbral", _derivative_law),
    "bell_moments": ("umbral", _bell_moments),
    "singleton_genfun": ("umbral", _singleton_genfun),
    "theta_bar_identity": ("umbral", _theta_bar),
    "dot_additivity": ("umbral", _dot_additivity),
    "dot_methods": ("umbral", _dot_methods),
    "abel_subtraction": ("umbral", _abel_subtraction),
    "volume_closed_form": ("volume", _volume_closed_form),
    "main_theorem": ("volume", _main_theorem),
    "theta_bar_volume": ("volume", _theorem4),
    "remark_substitution": ("volume", _remark_substitution),
    "eq_id1": ("volume", _eq_id1),
    "k_parking_theorem": ("volume", _k_parking_theorem),
    "scalar_remark": ("volume", _scalar_remark),
    "flag_omega": ("flags", _flag_omega),
    "flag_volume": ("flags", _flag_volume),
    "flag_inverse": ("flags", _flag_inverse),
    "flag_maximal_chains": ("flags", _flag_maximal),
    "typeb_dot_power": ("typeb", _typeb_dot_power),
    "typeb_abel": ("typeb", _typeb_abel),
    "typeb_volume": ("typeb", _typeb_volume),
    "typeb_dot_chain": ("typeb", _typeb_chain),
}


def _ns(max_n: int, cap: int, low: int = 1) -> range:
    return range(low, min(max_n, cap) + 1)


def plan(suite: str, max_n: int) -> List[Tuple[str, Dict[str, int]]]:
    """The (check, params) list for a suite, with n clamped per check."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if max_n < 1:
        raise ValueError("max_n must be positive")
    jobs: List[Tuple[str, Dict[str, int]]] = []

    def add(name, **params):
        jobs.append((name, params))

    def want(s):
        return suite in ("all", s)

    if want("counts"):
        for n in _ns(max_n, 7):
            add("park_count", n=n)
            add("orbit_count", n=n)
        for n in _ns(max_n, 6):
            add("typeb_count", n=n)
        for n in _ns(max_n, 9):
            add("nc_count", n=n)
        for n in _ns(max_n, 7):
            add("nc_bruteforce", n=n)
        for k in (2, 3):
            for n in _ns(max_n, 8 // k):
                add("nc_k_count", n=n, k=k)
        for n in _ns(max_n, 4):
            add("nc_b_count", n=n)
        for n in _ns(max_n, 6):
            add("nc_chains", n=n)
        for n in _ns(max_n, 4):
            add("nc_b_chains", n=n)
        for k in (2, 3):
            for n in _ns(max_n, 4):
                add("k_parking_dimension", n=n, k=k)
    if want("symfunc"):
        for n in _ns(max_n, 6):
            add("pf_dimension", n=n)
            add("pf_typeb_dimension", n=n)
            add("hstar_methods", n=n)
            add("hstar_omega", n=n)
            add("hstar_volume", n=n)
            add("omega_involution", n=n)
        add("stanley_st1", order=min(7, max_n + 2))
        for k in (2, 3):
            add("stanley_st2", order=min(5, max_n + 2), k=k)
    if want("umbral"):
        order = min(8, max_n + 3)
        add("inverse_law", order=order)
        add("derivative_law", order=order)
        add("bell_moments", order=min(6, max_n + 1))
        add("singleton_genfun", order=order)
        add("theta_bar_identity", order=order)
        top = min(3, max_n)
        for m in range(-top, top + 1):
            for n in range(-top, top + 1):
                add("dot_additivity", m=m, n=n, order=min(6, max_n + 1))
        for n in range(0, top + 1):
            add("dot_methods", n=n, order=min(6, max_n + 1))
        for n in _ns(max_n, 5):
            add("abel_subtraction", n=n)
    if want("volume"):
        for n in _ns(max_n, 6):
            add("volume_closed_form", n=n, kind="A")
            add("volume_closed_form", n=n, kind="B")
            add("main_theorem", n=n)
            add("theta_bar_volume", n=n)
            add("remark_substitution", n=n)
            add("scalar_remark", n=n, seed=n)
        for n in _ns(max_n, 5):
            add("eq_id1", n=n)
        for k in (2, 3):
            for n in _ns(max_n, 4):
                add("k_parking_theorem", n=n, k=k)
    if want("flags"):
        for n in _ns(max_n, 5):
            add("flag_omega", n=n)
            add("flag_volume", n=n)
            add("flag_inverse", n=n)
            add("flag_maximal_chains", n=n)
    if want("typeb"):
        for n in _ns(max_n, 5):
            add("typeb_dot_power", n=n)
            add("typeb_abel", n=n)
            add("typeb_volume", n=n)
            add("typeb_dot_chain", n=n)
    return jobs


def run_check(name: str, params: Dict[str, int]) -> CheckReport:
    _, fn = CHECKS[name]
    start = time.perf_counter()
    try:
        left, right = fn(**params)
        left_s, right_s = _ser(left), _ser(right)
        status = "pass" if left_s == right_s else "fail"
    except Exception as exc:  # a crashing check is a failed check
        left_s, right_s, status = f"error: {type(exc).__name__}: {exc}", None, "fail"
    elapsed = (time.perf_counter() - start) * 1000
    return CheckReport(name, dict(params), status, left_s, right_s, elapsed)


def _run_packed(job):
    return run_check(*job)


def run_suite(suite: str = "all", max_n: int = 5, jobs: int = 1) -> List[CheckReport]:
    """Run a suite; reports come back in plan order whatever the worker count."""
    if jobs < 1:
        raise ValueError("jobs must be positive")
    work = plan(suite, max_n)
    if jobs == 1:
        return [run_check(name, params) for name, params in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_packed, work))
