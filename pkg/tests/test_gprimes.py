import pytest
from hypothesis import given, strategies as st

from gaussabund.errors import DomainError
from gaussabund.gint import GaussianInt as G, canonicalize, is_canonical
from gaussabund.gprimes import (
    classify,
    is_gaussian_prime,
    is_rational_prime,
    primes_by_norm,
    rational_primes,
    sqrt_minus_one,
)
from tests import oracles


def _trial_is_prime(n):
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def test_rational_primes_match_trial_division():
    assert rational_primes(2000) == [n for n in range(2000) if _trial_is_prime(n)]


@pytest.mark.parametrize(
    "n, expected",
    [
        (2**61 - 1, True),
        (2**89 - 1, True),
        (2**61 + 1, False),
        (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (3825123056546413051, False),  # strong pseudoprime to the first nine prime bases
        (1 << 20, False),
        ((1 << 20) + 7, True),
    ],
)
def test_is_rational_prime_large(n, expected):
    assert is_rational_prime(n) is expected


def test_classify_examples():
    two = classify(2)
    assert two.kind == "ramified" and list(two.primes) == [G(1, 1)]
    five = classify(5)
    assert five.kind == "split" and list(five.primes) == [G(2, 1), G(1, 2)]
    assert oracles.mul((2, 1), (1, 2)) == (0, 5)
    three = classify(3)
    assert three.kind == "inert" and list(three.primes) == [G(3)]
    with pytest.raises(DomainError):
        classify(15)
    with pytest.raises(DomainError):
        classify(1)


@pytest.mark.parametrize("p", [q for q in range(5, 3000) if _trial_is_prime(q) and q % 4 == 1])
def test_split_primes_multiply_back(p):
    x = sqrt_minus_one(p)
    assert (x * x + 1) % p == 0
    a, b = classify(p).primes
    assert a.norm() == b.norm() == p
    assert is_canonical(a) and is_canonical(b)
    assert canonicalize(a.conj())[1] == b
    assert oracles.divides((a.re, a.im), (p, 0))


def test_is_gaussian_prime_examples():
    assert is_gaussian_prime(G(1, 1)) is True
    assert is_gaussian_prime(G(5)) is False
    assert is_gaussian_prime(G(3)) is True
    assert is_gaussian_prime(G(0, -7)) is True
    with pytest.raises(DomainError):
        is_gaussian_prime(G(0, 1))
    with pytest.raises(DomainError):
        is_gaussian_prime(G(0))


@given(st.integers(-25, 25), st.integers(-25, 25))
def test_is_gaussian_prime_agrees_with_trial_division(a, b):
    if a * a + b * b <= 1:
        return
    assert is_gaussian_prime(G(a, b)) == oracles.is_prime_by_trial((a, b))


def test_primes_by_norm_examples():
    assert primes_by_norm(5) == [G(1, 1), G(2, 1), G(1, 2)]
    assert primes_by_norm(10) == [G(1, 1), G(2, 1), G(1, 2), G(3)]


def test_primes_by_norm_matches_lattice_oracle():
    limit = 600
    expected = sorted(
        (z for z in oracles.canonical_lattice(2, limit) if oracles.is_prime_by_trial(z)),
        key=lambda z: (oracles.norm(z), z[1]),
    )
    assert [(p.re, p.im) for p in primes_by_norm(limit)] == expected
