import pytest
from hypothesis import given, settings, strategies as st

from umbracomb.coeffring import GradedPoly
from umbracomb.series import (
    CompositionError,
    InversionError,
    TruncSeries,
    UnitError,
    series_arith,
    series_coeff,
    series_comp_inverse,
    series_compose,
)

h = lambda i: GradedPoly.gen(i, "h")


def test_inverse_of_t_plus_t2():
    t = TruncSeries.variable(4)
    inv = series_comp_inverse(t + t * t)
    assert [series_coeff(inv, i) for i in range(5)] == [0, 1, -1, 2, -5]
    assert str(inv) == "t - t^2 + 2*t^3 - 5*t^4"


def test_inverse_of_t_over_h():
    t = TruncSeries.variable(3)
    H = TruncSeries([1, h(1), h(2), h(3)], 3)
    inv = series_comp_inverse(t / H)
    assert inv[1] == 1
    assert inv[2] == h(1)
    assert inv[3] == h(2) + h(1) ** 2


def test_catalan_generating_function():
    # t - t^2 inverts to the shifted Catalan series
    inv = series_comp_inverse(TruncSeries([0, 1, -1], 8))
    assert [inv[i] for i in range(1, 9)] == [1, 1, 2, 5, 14, 42, 132, 429]


def test_errors():
    with pytest.raises(InversionError):
        series_comp_inverse(TruncSeries([1, 1], 3))
    with pytest.raises(InversionError):
        series_comp_inverse(TruncSeries([0, 0, 1], 3))
    with pytest.raises(UnitError):
        TruncSeries([0, 1], 3).reciprocal()
    with pytest.raises(CompositionError):
        series_compose(TruncSeries([1, 1], 3), TruncSeries([1, 1], 3))


def test_reciprocal_of_h():
    H = TruncSeries([1, h(1), h(2)], 2)
    r = H.reciprocal()
    assert r[1] == -h(1)
    assert r[2] == h(1) ** 2 - h(2)


def test_geometric_power():
    f = TruncSeries([1, -1], 5) ** -2
    assert [f[i] for i in range(6)] == [1, 2, 3, 4, 5, 6]
    assert series_arith(TruncSeries([1, 1], 3), None, "pow", 3) == TruncSeries([1, 3, 3, 1], 3)


def _series(order):
    return st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5),
                    min_size=order, max_size=order)


@settings(max_examples=40, deadline=None)
@given(_series(6), st.fractions(min_value=-4, max_value=4, max_denominator=5).filter(bool))
def test_inverse_round_trip(tail, lead):
    g = TruncSeries([0, lead] + tail[1:], 6)
    t = TruncSeries.variable(6)
    inv = series_comp_inverse(g)
    assert g.compose(inv) == t
    assert inv.compose(g) == t


@settings(max_examples=40, deadline=None)
@given(_series(6), st.fractions(min_value=-4, max_value=4, max_denominator=5).filter(bool))
def test_reciprocal_law(tail, c0):
    f = TruncSeries([c0] + tail[1:], 5)
    assert f * f.reciprocal() == TruncSeries.one(5)


@settings(max_examples=30, deadline=None)
@given(_series(5), _series(5), _series(5))
def test_composition_is_associative(a, b, c):
    f = TruncSeries(a, 4)
    g = TruncSeries([0] + b[1:], 4)
    k = TruncSeries([0] + c[1:], 4)
    assert f.compose(g).compose(k) == f.compose(g.compose(k))
