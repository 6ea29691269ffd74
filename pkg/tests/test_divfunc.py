from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gaussabund.divfunc import (
    abundancy,
    abundancy_inverse_sum,
    abundancy_norm,
    abundancy_result,
    are_friendly,
    divisors,
    sigma_k,
    sigma_k_bruteforce,
)
from gaussabund.errors import DomainError, ResourceError
from gaussabund.gfactor import coprime, factor
from gaussabund.gint import GaussianInt as G, GaussianRational as Q, associates, canonicalize
from tests import oracles

small = st.builds(G, st.integers(-60, 60), st.integers(-60, 60)).filter(bool)


def test_sigma_examples():
    assert sigma_k(G(1, 1), 1) == G(2, 1)
    assert sigma_k(G(2), 1) == G(2, 3)
    assert sigma_k(G(2, 1), 1) == G(3, 1)
    assert sigma_k(G(1), 3) == G(1)
    assert sigma_k_bruteforce(G(2), 1) == G(2, 3)
    assert sigma_k_bruteforce(G(5), 1) == G(4, 8)
    # (1 + (2+i)) (1 + (1+2i)) and 1 + (1+i) + (1+i)^2, expanded on tuples
    assert oracles.mul((3, 1), (2, 2)) == (4, 8)
    one_i = (1, 1)
    sq = oracles.mul(one_i, one_i)
    assert (1 + one_i[0] + sq[0], one_i[1] + sq[1]) == (2, 3)


def test_sigma_errors():
    with pytest.raises(DomainError):
        sigma_k(0, 1)
    with pytest.raises(DomainError):
        sigma_k(G(2), 0)
    with pytest.raises(ResourceError):
        sigma_k_bruteforce(G(10**4), 1)


@given(small)
def test_divisor_classes_match_lattice_search(z):
    # one divisor per associate class, and every canonical lattice divisor covered
    ours = sorted(canonicalize(d)[1].sort_key() for d in divisors(z))
    lattice = sorted((oracles.norm(d), d[0]) for d in oracles.canonical_divisors((z.re, z.im)))
    assert ours == lattice


@given(small, st.integers(1, 4))
def test_sigma_product_equals_bruteforce(z, k):
    assert sigma_k(z, k) == sigma_k_bruteforce(z, k)


@given(small)
def test_sigma_associate_invariant(z):
    for w in associates(z):
        assert sigma_k(w, 2) == sigma_k(z, 2)


def test_abundancy_examples():
    assert abundancy(G(1, 1), 1) == Q(G(3, -1), 2)
    assert abundancy(G(2, 1), 1) == Q(G(7, -1), 5)
    assert abundancy(G(2), 1) == Q(G(3, -2), 2)
    assert abundancy_norm(G(2, 1), 1) == 2
    assert abundancy(G(2), 2).norm() == Fraction(13, 16)
    assert abundancy(G(0, 1), 3) == 1
    # 1+2i and 2+i are conjugate classes with different indices
    assert abundancy(G(1, 2), 1) == Q(G(6, -2), 5)


@given(small, st.integers(1, 3))
def test_abundancy_matches_float_product_and_inverse_sum(z, k):
    f = factor(z)
    exact = abundancy(z, k)
    assert exact == abundancy_inverse_sum(z, k)
    approx = oracles.abundancy_complex([((p.re, p.im), e) for p, e in f.factors], k)
    assert abs(float(exact.real) - approx.real) < 1e-9
    assert abs(float(exact.imag) - approx.imag) < 1e-9


@given(small, small, st.integers(1, 3))
def test_weak_multiplicativity(a, b, k):
    if coprime(a, b):
        assert abundancy(a * b, k) == abundancy(a, k) * abundancy(b, k)


def test_result_json():
    r = abundancy_result(G(2, 1), 1)
    assert r.to_json() == {
        "eta": "2+i",
        "k": 1,
        "sigma": "3+i",
        "index": {"num": "7-i", "den": "5"},
        "norm": "2/1",
    }


def test_friendly_examples():
    r = are_friendly(G(1, -2), G(2, 1), 1)
    assert r and r.associates
    r = are_friendly(G(1, 1), G(3), 1)
    assert not r and not r.associates
    assert r.index1 == Q(G(3, -1), 2) and r.index2 == Q(G(4), 3)


def test_nontrivial_friends():
    r = are_friendly(G(2, 2), G(24, 24), 1)
    assert r and not r.associates
