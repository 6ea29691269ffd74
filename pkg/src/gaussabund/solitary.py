"""Certificates of k-powerful solitarity.

Greening's criterion asks whether gcd(z**k, sigma_k(z)) is a unit. Over Z
that makes ``z`` solitary; over Z[i] the implication can fail, because a
multiple of ``z`` may have a smaller index norm. For example 2+2i passes the
test at k = 1 yet I_1(2+2i) = I_1(24+24i). A certificate records that the
gcd test passed and nothing more; an uncertified result is inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from gaussabund.divfunc import sigma_k
from gaussabund.errors import DomainError, InconsistencyError
from gaussabund.gint import GaussianInt, canonicalize, gcd, parse_gaussian
from gaussabund.gprimes import is_gaussian_prime, is_rational_prime

__all__ = [
    "SolitaryCertificate",
    "greening_check",
    "prime_power_solitary",
    "prime_conjugate_pair_solitary",
]

Family = Literal["greening", "prime_power", "prime_conjugate_pair", "none"]


@dataclass(frozen=True)
class SolitaryCertificate:
    eta: GaussianInt
    k: int
    gcd_value: GaussianInt
    certified: bool
    family: Family

    def to_json(self) -> dict:
        return {
            "eta": str(self.eta),
            "k": self.k,
            "gcd": str(self.gcd_value),
            "certified": self.certified,
            "family": self.family,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SolitaryCertificate":
        return cls(
            parse_gaussian(obj["eta"]),
            int(obj["k"]),
            parse_gaussian(obj["gcd"]),
            bool(obj["certified"]),
            obj["family"],
        )


def _criterion_gcd(z: GaussianInt, k: int) -> GaussianInt:
    return gcd(z**k, sigma_k(z, k))


def greening_check(z, k: int) -> SolitaryCertificate:
    z = GaussianInt.coerce(z)
    if not isinstance(k, int) or k < 1:
        raise DomainError("k must be a positive integer, got %r" % (k,))
    if z.norm() <= 1:
        raise DomainError("%s is zero or a unit" % z)
    g = _criterion_gcd(z, k)
    certified = g.norm() == 1
    return SolitaryCertificate(z, k, g, certified, "greening" if certified else "none")


def prime_power_solitary(prime, n: int, k: int) -> SolitaryCertificate:
    """Certificate for ``prime**n``; the gcd is a unit because
    sigma_k(prime**n) = 1 + prime**k * (...)."""
    prime = GaussianInt.coerce(prime)
    if prime.norm() <= 1 or not is_gaussian_prime(prime):
        raise DomainError("%s is not a Gaussian prime" % prime)
    if n < 1 or k < 1:
        raise DomainError("n and k must be positive")
    prime = canonicalize(prime)[1]
    z = prime**n
    g = _criterion_gcd(z, k)
    if g.norm() != 1:
        raise InconsistencyError("prime power %s^%d failed the criterion at k=%d" % (prime, n, k))
    return SolitaryCertificate(z, k, g, True, "prime_power")


def prime_conjugate_pair_solitary(prime, n1: int, n2: int, k: int) -> SolitaryCertificate:
    """Run the criterion on ``prime**n1 * conj(prime)**n2`` for a split prime.

    The criterion does not hold for every such product: at ``prime = 2+i``,
    ``n1 = n2 = k = 1`` the product is associated to 5 and
    sigma_1 = 4+8i = 4*(1+2i) shares the factor 1+2i with it. Those cases
    come back uncertified with family ``"none"``.
    """
    prime = GaussianInt.coerce(prime)
    if prime.norm() <= 1 or not is_gaussian_prime(prime):
        raise DomainError("%s is not a Gaussian prime" % prime)
    prime = canonicalize(prime)[1]
    p = prime.norm()
    if p % 4 != 1 or not is_rational_prime(p):
        raise DomainError(
            "%s is associated to its conjugate; use prime_power_solitary" % prime
        )
    if n1 < 1 or n2 < 1 or k < 1:
        raise DomainError("n1, n2 and k must be positive")
    partner = canonicalize(prime.conj())[1]
    z = prime**n1 * partner**n2
    cert = greening_check(z, k)
    if not cert.certified:
        return cert
    return SolitaryCertificate(z, k, cert.gcd_value, True, "prime_conjugate_pair")
