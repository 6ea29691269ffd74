"""Divisor-power sums and the k-powerful abundancy index over Z[i].

For ``z = u * prod(p_j ** e_j)`` with canonical primes ``p_j``,

    sigma_k(z) = prod(1 + p_j**k + ... + p_j**(k*e_j))
    I_k(z)     = u**k * sigma_k(z) / z**k = prod(sum_{m<=e_j} p_j**(-m*k))

``sigma_k`` depends only on the canonical primes, so ``I_k`` is the same for
all four associates of ``z``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from gaussabund.errors import DomainError, ResourceError
from gaussabund.gfactor import Factorization, factor
from gaussabund.gint import GaussianInt, GaussianRational, are_associates

__all__ = [
    "AbundancyResult",
    "Friendliness",
    "ORACLE_NORM_BOUND",
    "sigma_k",
    "sigma_k_bruteforce",
    "abundancy",
    "abundancy_inverse_sum",
    "abundancy_norm",
    "abundancy_result",
    "are_friendly",
    "divisors",
]

ORACLE_NORM_BOUND = 10**7


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise DomainError("k must be a positive integer, got %r" % (k,))


def _factor_nonzero(z) -> tuple[GaussianInt, Factorization]:
    z = GaussianInt.coerce(z)
    if not z:
        raise DomainError("divisor functions are undefined at 0")
    return z, factor(z)


def _geometric(base: GaussianInt, terms: int) -> GaussianInt:
    """1 + base + ... + base**(terms-1), by Horner's rule."""
    acc = GaussianInt(1, 0)
    for _ in range(terms - 1):
        acc = acc * base + 1
    return acc


def sigma_from_factorization(f: Factorization, k: int) -> GaussianInt:
    out = GaussianInt(1, 0)
    for p, e in f.factors:
        out = out * _geometric(p**k, e + 1)
    return out


def sigma_k(z, k: int) -> GaussianInt:
    _check_k(k)
    _, f = _factor_nonzero(z)
    return sigma_from_factorization(f, k)


def divisors(z) -> list[GaussianInt]:
    """One divisor per associate class: the products ``prod(p_j ** f_j)``
    with ``0 <= f_j <= e_j``."""
    _, f = _factor_nonzero(z)
    powers = [[p**m for m in range(e + 1)] for p, e in f.factors]
    out = []
    for combo in itertools.product(*powers):
        d = GaussianInt(1, 0)
        for q in combo:
            d = d * q
        out.append(d)
    return out


def sigma_k_bruteforce(z, k: int, bound: int = ORACLE_NORM_BOUND) -> GaussianInt:
    """Sum of ``d**k`` over :func:`divisors` of ``z``; reference for :func:`sigma_k`."""
    _check_k(k)
    z = GaussianInt.coerce(z)
    if z and z.norm() > bound:
        raise ResourceError("norm %d exceeds the oracle bound %d" % (z.norm(), bound))
    total = GaussianInt(0, 0)
    for d in divisors(z):
        total = total + d**k
    return total


def abundancy_from_factorization(z: GaussianInt, f: Factorization, k: int) -> GaussianRational:
    sigma = sigma_from_factorization(f, k)
    return GaussianRational.quotient((f.unit**k) * sigma, z**k)


def abundancy(z, k: int) -> GaussianRational:
    """Exact I_k(z) in canonical reduced form."""
    _check_k(k)
    z, f = _factor_nonzero(z)
    return abundancy_from_factorization(z, f, k)


def abundancy_inverse_sum(z, k: int) -> GaussianRational:
    """I_k(z) evaluated as sigma_{-k}: a product of sums of inverse prime powers."""
    _check_k(k)
    _, f = _factor_nonzero(z)
    out = GaussianRational(1)
    for p, e in f.factors:
        inv = GaussianRational.quotient(1, p**k)
        term = GaussianRational(1)
        power = GaussianRational(1)
        for _ in range(e):
            power = power * inv
            term = term + power
        out = out * term
    return out


def abundancy_norm(z, k: int) -> Fraction:
    """The exact rational ||I_k(z)||."""
    return abundancy(z, k).norm()


@dataclass(frozen=True)
class AbundancyResult:
    eta: GaussianInt
    k: int
    sigma: GaussianInt
    index: GaussianRational

    def to_json(self) -> dict:
        n = self.index.norm()
        return {
            "eta": str(self.eta),
            "k": self.k,
            "sigma": str(self.sigma),
            "index": self.index.to_json(),
            "norm": "%d/%d" % (n.numerator, n.denominator),
        }


def abundancy_result(z, k: int) -> AbundancyResult:
    _check_k(k)
    z, f = _factor_nonzero(z)
    sigma = sigma_from_factorization(f, k)
    index = GaussianRational.quotient((f.unit**k) * sigma, z**k)
    return AbundancyResult(z, k, sigma, index)


@dataclass(frozen=True)
class Friendliness:
    """Outcome of a friendliness test. Truthy iff the two indices agree;
    ``associates`` marks the trivial case of associated inputs."""

    friendly: bool
    associates: bool
    index1: GaussianRational
    index2: GaussianRational

    def __bool__(self):
        return self.friendly


def are_friendly(a, b, k: int) -> Friendliness:
    ia = abundancy(a, k)
    ib = abundancy(b, k)
    return Friendliness(ia == ib, are_associates(a, b), ia, ib)
