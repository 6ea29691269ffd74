"""Gaussian primes: splitting of rational primes, primality, enumeration by norm."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Literal

from gaussabund import _core
from gaussabund.errors import DomainError
from gaussabund.gint import GaussianInt, canonicalize, gcd

__all__ = [
    "PrimeClass",
    "classify",
    "is_rational_prime",
    "is_gaussian_prime",
    "primes_by_norm",
    "rational_primes",
    "sqrt_minus_one",
]

Kind = Literal["ramified", "inert", "split"]

# Below this bound primality comes from a cached sieve table.
_SIEVE_LIMIT = 1 << 20

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class PrimeClass:
    """How a rational prime ``p`` decomposes in Z[i]."""

    p: int
    kind: Kind
    primes: tuple[GaussianInt, ...]


@lru_cache(maxsize=4)
def _sieve(limit: int) -> bytearray:
    return _core.prime_sieve(limit)


def is_rational_prime(n: int) -> bool:
    """Deterministic primality for n < 3.3e24 (Miller-Rabin, first 12 prime bases)."""
    if n < 2:
        return False
    if n <= _SIEVE_LIMIT:
        return bool(_sieve(_SIEVE_LIMIT)[n])
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def rational_primes(limit: int) -> list[int]:
    if limit < 2:
        return []
    table = _sieve(_SIEVE_LIMIT) if limit <= _SIEVE_LIMIT else _core.prime_sieve(limit)
    return [n for n in range(2, limit + 1) if table[n]]


def sqrt_minus_one(p: int) -> int:
    """Least positive x with x*x = -1 (mod p), for a prime p = 1 (mod 4)."""
    if p % 4 != 1:
        raise DomainError("-1 is a square mod %d only when %d = 1 (mod 4)" % (p, p))
    a = 2
    while pow(a, (p - 1) // 2, p) != p - 1:
        a += 1
    x = pow(a, (p - 1) // 4, p)
    return min(x, p - x)


def classify(p: int) -> PrimeClass:
    if not is_rational_prime(p):
        raise DomainError("%d is not a rational prime" % p)
    if p == 2:
        return PrimeClass(2, "ramified", (GaussianInt(1, 1),))
    if p % 4 == 3:
        return PrimeClass(p, "inert", (GaussianInt(p, 0),))
    x = sqrt_minus_one(p)
    pi = gcd(GaussianInt(p, 0), GaussianInt(x, 1))
    partner = canonicalize(pi.conj())[1]
    pair = tuple(sorted((pi, partner), key=lambda z: z.im))
    return PrimeClass(p, "split", pair)


def is_gaussian_prime(z) -> bool:
    z = GaussianInt.coerce(z)
    n = z.norm()
    if n == 0:
        raise DomainError("0 is neither prime nor a unit")
    if n == 1:
        raise DomainError("%s is a unit" % z)
    if is_rational_prime(n):
        return True
    if z.re == 0 or z.im == 0:
        q = abs(z.re) + abs(z.im)
        return q % 4 == 3 and is_rational_prime(q)
    return False


def primes_by_norm(limit: int) -> list[GaussianInt]:
    """Canonical Gaussian primes of norm <= limit, ordered by norm and then
    by imaginary part (so 2+i precedes 1+2i)."""
    if limit < 2:
        return []
    out = []
    for p in rational_primes(limit):
        r = p % 4
        if r == 1:
            out.extend((p, pi.im, pi) for pi in classify(p).primes)
        elif r == 2:
            out.append((2, 1, GaussianInt(1, 1)))
        elif p <= isqrt(limit):
            out.append((p * p, 0, GaussianInt(p, 0)))
    out.sort(key=lambda t: (t[0], t[1]))
    return [z for _, _, z in out]
