import pytest

from gaussabund.divfunc import are_friendly
from gaussabund.errors import DomainError
from gaussabund.gint import GaussianInt as G
from gaussabund.solitary import (
    SolitaryCertificate,
    greening_check,
    prime_conjugate_pair_solitary,
    prime_power_solitary,
)
from gaussabund.gprimes import primes_by_norm
from tests import oracles


def _oracle_coprime(x, y):
    """No non-unit lattice element divides both."""
    n = min(oracles.norm(x), oracles.norm(y))
    return not any(
        oracles.divides(d, x) and oracles.divides(d, y) for d in oracles.canonical_lattice(2, n)
    )


def test_greening_examples():
    c = greening_check(G(3), 1)
    assert c.certified and c.gcd_value == 1 and c.family == "greening"
    assert greening_check(G(1, 1) ** 3, 1).certified
    c = greening_check(G(2, 1), 2)
    assert c.certified
    # sigma_2(2+i) = 1 + (2+i)^2 = 4+4i; (2+i)^2 = 3+4i
    assert _oracle_coprime((3, 4), (4, 4))


def test_greening_errors():
    with pytest.raises(DomainError):
        greening_check(G(0, 1), 1)
    with pytest.raises(DomainError):
        greening_check(G(0), 1)
    with pytest.raises(DomainError):
        greening_check(G(3), 0)


def test_prime_power_examples():
    assert prime_power_solitary(G(1, 1), 4, 1).certified
    assert prime_power_solitary(G(3), 2, 2).family == "prime_power"
    with pytest.raises(DomainError):
        prime_power_solitary(G(5), 1, 1)


def test_prime_powers_certified_and_agree_with_oracle():
    for p in primes_by_norm(40):
        for n in (1, 2):
            c = prime_power_solitary(p, n, 1)
            z = p**n
            s = 1 + p if n == 1 else 1 + p + p * p
            assert c.certified == _oracle_coprime((z.re, z.im), (s.re, s.im))


def test_conjugate_pair_counterexample_is_reported_honestly():
    # 5 = -i (2+i)(1+2i) and sigma_1(5) = 4+8i = 4 (1+2i): they share 1+2i
    assert oracles.divides((1, 2), (4, 8))
    assert oracles.divides((1, 2), (5, 0))
    c = prime_conjugate_pair_solitary(G(2, 1), 1, 1, 1)
    assert not c.certified and c.family == "none"
    assert c.gcd_value == G(1, 2)


def test_conjugate_pair_second_example():
    c = prime_conjugate_pair_solitary(G(2, 1), 2, 1, 1)
    z = G(2, 1) ** 2 * G(1, 2)
    s = (1 + G(2, 1) + G(2, 1) ** 2) * (1 + G(1, 2))
    assert c.certified == _oracle_coprime((z.re, z.im), (s.re, s.im))
    assert c.certified and c.family == "prime_conjugate_pair"


def test_conjugate_pair_rejects_non_split():
    for p in (G(3), G(1, 1)):
        with pytest.raises(DomainError):
            prime_conjugate_pair_solitary(p, 1, 1, 1)


def test_certificate_json_round_trip():
    c = greening_check(G(3, 2), 2)
    assert SolitaryCertificate.from_json(c.to_json()) == c


def test_certified_prime_power_with_a_friend():
    # (1+i)^3 ~ 2+2i; both indices equal 5(1-i)/4, summed by hand as
    # geometric series in (1-i)/2
    c = greening_check(G(2, 2), 1)
    assert c.certified
    f = are_friendly(G(2, 2), G(24, 24), 1)
    assert f.friendly and not f.associates
    pp = [((1, 1), 3)]
    assert abs(oracles.abundancy_complex(pp, 1) - (1.25 - 1.25j)) < 1e-12
    assert abs(oracles.abundancy_complex([((1, 1), 7), ((3, 0), 1)], 1) - (1.25 - 1.25j)) < 1e-12
