from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from umbracomb.coeffring import (
    FamilyError,
    GradedPoly,
    format_rational,
    graded_truncate,
    parse_rational,
    ring_arith,
)

a = lambda i: GradedPoly.gen(i, "a")
h = lambda i: GradedPoly.gen(i, "h")


def test_additive_inverse():
    assert ring_arith(a(1) + a(2), -a(1), "add") == a(2)


def test_exponent_addition():
    assert ring_arith(a(1), a(1), "mul") == GradedPoly.gen(1, "a", 2)


def test_difference_of_squares():
    p = ring_arith(h(1) + h(2), h(1) - h(2), "mul")
    assert p == h(1) ** 2 - h(2) ** 2


def test_family_mismatch():
    with pytest.raises(FamilyError):
        ring_arith(a(1), h(1), "add")
    with pytest.raises(FamilyError):
        a(1) * h(1)


def test_constants_mix_with_any_family():
    assert (h(1) + 1).family == "h"
    assert GradedPoly.const(2, "a") * h(1) == 2 * h(1)


def test_truncate_examples():
    p = h(1) ** 3 + h(3) + h(4)
    assert graded_truncate(p, 3) == h(1) ** 3 + h(3)
    assert graded_truncate(p + 5, 0) == GradedPoly.const(5, "h")
    assert graded_truncate(a(1) * a(2), 2).is_zero()


def test_x_family_has_unit_weights():
    x = lambda i: GradedPoly.gen(i, "x")
    assert (x(3) * x(1)).degree() == 2


@pytest.mark.parametrize("q, text", [(Fraction(3, 2), "3/2"), (Fraction(4), "4"), (Fraction(-1, 3), "-1/3")])
def test_rational_strings(q, text):
    assert format_rational(q) == text
    assert parse_rational(text) == q


def test_json_roundtrip_and_format():
    p = GradedPoly.gen(1, "a", 2) * a(3) + Fraction(1, 2)
    d = p.to_dict()
    assert d == {"a1^2*a3": "1", "1": "1/2"}
    assert GradedPoly.from_dict(d) == p
    f = h(2) * h(1) ** 2 * 3
    assert f.to_dict() == {"h2*h1^2": "3"}
    assert GradedPoly.from_json(f.to_json()) == f


def test_pretty_order():
    f = h(3) + 3 * h(2) * h(1) + h(1) ** 3
    assert f.pretty() == "h3 + 3*h2*h1 + h1^3"
    assert (h(1) ** 2 - h(2)).pretty() == "-h2 + h1^2"


polys = st.dictionaries(
    st.lists(st.tuples(st.integers(1, 4), st.integers(1, 3)), max_size=3, unique_by=lambda t: t[0]).map(
        lambda xs: tuple(sorted(xs))),
    st.fractions(min_value=-5, max_value=5, max_denominator=7),
    max_size=4,
).map(lambda d: GradedPoly(d, "a"))


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)


@given(st.fractions(max_denominator=50).filter(bool), st.fractions(max_denominator=50).filter(bool))
def test_rational_roundtrip(p, q):
    assert (p / q) * (q / p) == 1


@given(polys, st.integers(0, 12))
def test_truncate_idempotent(p, d):
    assert graded_truncate(graded_truncate(p, d), d) == graded_truncate(p, d)
    assert all(p.weight(m) <= d for m in graded_truncate(p, d).terms)
