from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from oracles import frobenius_of_words, poly_from_x_dict
from umbracomb.coeffring import GradedPoly
from umbracomb.partitions import enumerate_partitions
from umbracomb.symfunc import (
    FaithfulnessError,
    SymmetryError,
    dimension,
    e_in_h,
    expand_in_variables,
    h,
    h_mu,
    hstar,
    identify_symmetric,
    omega,
    pf,
    pf_k,
    pf_typeB,
)


def e_brute(k, m):
    """e_k in m variables, as a sum over 0/1 exponent vectors."""
    return poly_from_x_dict({v: 1 for v in product((0, 1), repeat=m) if sum(v) == k})


def h_brute(k, m):
    return poly_from_x_dict({v: 1 for v in product(range(k + 1), repeat=m) if sum(v) == k})


@pytest.mark.parametrize("n", range(1, 6))
def test_e_in_h_matches_variables(n):
    m = n + 1
    assert expand_in_variables(e_in_h(n), m) == e_brute(n, m)
    assert expand_in_variables(h(n), m) == h_brute(n, m)


def test_e_small():
    assert e_in_h(2) == h(1) ** 2 - h(2)
    assert str(e_in_h(3)) == "h3 - 2*h2*h1 + h1^3"


def test_pf_small_values():
    assert pf(2) == h(2) + h(1) ** 2
    assert str(pf(3)) == "h3 + 3*h2*h1 + h1^3"
    assert pf_typeB(2) == 2 * h(2) + h(1) ** 2
    assert pf_typeB(3) == 3 * h(3) + 6 * h(2) * h(1) + h(1) ** 3


def test_pf_k_two_two():
    # orbit count: reps (1,1),(2,2) have content (2); the other five have content (1,1)
    assert pf_k(2, 2) == 2 * h(2) + 5 * h(1) ** 2
    assert pf_k(1, 3) == 3 * h(1)


@pytest.mark.parametrize("n", range(1, 6))
def test_pf_is_frobenius_of_parking_action(n):
    words = [w for w in product(range(1, n + 1), repeat=n)
             if all(x <= j for j, x in enumerate(sorted(w), 1))]
    assert pf(n) == frobenius_of_words(words)
    assert dimension(pf(n)) == (n + 1) ** (n - 1)


@pytest.mark.parametrize("n, k", [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3), (4, 2)])
def test_pf_k_is_frobenius(n, k):
    words = [w for w in product(range(1, k * n + 1), repeat=n)
             if all(x <= k * j for j, x in enumerate(sorted(w), 1))]
    assert pf_k(n, k) == frobenius_of_words(words)


@pytest.mark.parametrize("n", range(1, 6))
def test_pf_k1_is_pf(n):
    assert pf_k(n, 1) == pf(n)


@pytest.mark.parametrize("n", range(1, 5))
def test_pf_typeB_is_frobenius(n):
    assert pf_typeB(n) == frobenius_of_words(product(range(1, n + 1), repeat=n))
    assert dimension(pf_typeB(n)) == n ** n


@pytest.mark.parametrize("n", range(1, 7))
def test_hstar_methods(n):
    assert hstar(n, "series_inversion") == hstar(n, "lagrange_formula")
    assert omega(hstar(n)) * (-1) ** n == pf(n)


def test_hstar_small():
    assert hstar(1) == -h(1)
    assert hstar(2) == omega(pf(2))


def test_errors():
    with pytest.raises(FaithfulnessError):
        expand_in_variables(h(3), 2)
    x = lambda i: GradedPoly.gen(i, "x")
    with pytest.raises(SymmetryError):
        identify_symmetric(x(1) * x(1), 2, 2)
    with pytest.raises(SymmetryError):
        identify_symmetric(x(1) + x(2) * x(1), 2, 2)
    with pytest.raises(FaithfulnessError):
        identify_symmetric(x(1) + x(2), 1, 2)
    with pytest.raises(ValueError):
        hstar(3, "bogus")


basis = st.integers(2, 5).flatmap(
    lambda n: st.lists(st.integers(-3, 3), min_size=len(enumerate_partitions(n)),
                       max_size=len(enumerate_partitions(n))).map(
        lambda cs: (n, sum((h_mu(mu) * c for mu, c in zip(enumerate_partitions(n), cs)), GradedPoly({}, "h")))))


@settings(max_examples=25, deadline=None)
@given(basis)
def test_omega_involution_and_identify(pair):
    n, f = pair
    assert omega(omega(f)) == f
    assert identify_symmetric(expand_in_variables(f, n), n, n) == f
