"""Factorisation of Gaussian integers into a unit and canonical prime powers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd as igcd, isqrt

from gaussabund import _core
from gaussabund.errors import DomainError
from gaussabund.gint import GaussianInt, Unit, canonicalize, gcd, parse_gaussian
from gaussabund.gprimes import classify, is_gaussian_prime, is_rational_prime, rational_primes

__all__ = ["Factorization", "factor", "factor_integer", "ord", "coprime"]

TRIAL_DIVISION_BOUND = 10**6
_SPF_LIMIT = 1 << 20
_RHO_SEED = 2


@dataclass(frozen=True)
class Factorization:
    """``unit * prod(p**e for p, e in factors)``, primes canonical and sorted
    by (norm, re)."""

    unit: Unit
    factors: tuple[tuple[GaussianInt, int], ...]

    def expand(self) -> GaussianInt:
        z = GaussianInt(1, 0)
        for p, e in self.factors:
            z = z * p**e
        return self.unit * z

    @property
    def primes(self) -> tuple[GaussianInt, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, prime: GaussianInt) -> int:
        for p, e in self.factors:
            if p == prime:
                return e
        return 0

    def to_json(self) -> dict:
        return {"unit": self.unit.to_json(), "factors": [[str(p), e] for p, e in self.factors]}

    @classmethod
    def from_json(cls, obj: dict) -> "Factorization":
        return cls(
            Unit.from_json(obj["unit"]),
            tuple((parse_gaussian(p), int(e)) for p, e in obj["factors"]),
        )

    def __str__(self):
        parts = ["(%s)^%d" % (p, e) if e > 1 else "(%s)" % p for p, e in self.factors]
        if not parts:
            return str(self.unit)
        if self.unit.t == 0:
            return " * ".join(parts)
        return "%s * %s" % (self.unit, " * ".join(parts))


@lru_cache(maxsize=1)
def _spf():
    return _core.smallest_factor_table(_SPF_LIMIT)


@lru_cache(maxsize=1)
def _trial_primes():
    return rational_primes(TRIAL_DIVISION_BOUND)


def _brent(n: int) -> int:
    """A nontrivial factor of the odd composite ``n`` (Brent's rho variant)."""
    c = 1
    while True:
        y, m, g, r, q = _RHO_SEED, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = igcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = igcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1


def _split_large(n: int, out: dict) -> None:
    if n == 1:
        return
    if is_rational_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = isqrt(n)
    if r * r == n:
        _split_large(r, out)
        _split_large(r, out)
        return
    d = _brent(n)
    _split_large(d, out)
    _split_large(n // d, out)


def factor_integer(n: int) -> dict[int, int]:
    """Prime factorisation of a positive rational integer as {p: e}."""
    if n < 1:
        raise DomainError("factor_integer needs n >= 1, got %d" % n)
    out: dict[int, int] = {}
    if n <= _SPF_LIMIT:
        spf = _spf()
        while n > 1:
            p = spf[n]
            out[p] = out.get(p, 0) + 1
            n //= p
        return out
    for p in _trial_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    if n > 1:
        if n < TRIAL_DIVISION_BOUND**2:
            out[n] = out.get(n, 0) + 1
        else:
            large: dict[int, int] = {}
            _split_large(n, large)
            for p, e in large.items():
                out[p] = out.get(p, 0) + e
    return dict(sorted(out.items()))


def _strip(z: GaussianInt, p: GaussianInt) -> tuple[GaussianInt, int]:
    e = 0
    n = p.norm()
    pc = p.conj()
    while True:
        num = z * pc
        if num.re % n or num.im % n:
            return z, e
        z = GaussianInt(num.re // n, num.im // n)
        e += 1


def factor(z) -> Factorization:
    z = GaussianInt.coerce(z)
    if not z:
        raise DomainError("0 has no factorisation")
    rest = z
    found = []
    for p, e in factor_integer(z.norm()).items():
        pc = classify(p)
        if pc.kind == "split":
            total = 0
            for pi in pc.primes:
                rest, k = _strip(rest, pi)
                if k:
                    found.append((pi, k))
                total += k
            if total != e:
                raise AssertionError("exponent mismatch at %d for %s" % (p, z))
        else:
            pi = pc.primes[0]
            rest, k = _strip(rest, pi)
            found.append((pi, k))
    found.sort(key=lambda t: t[0].sort_key())
    return Factorization(Unit.from_value(rest), tuple(found))


def ord(z, prime) -> int:
    """Exponent of the prime ``prime`` in ``z``."""
    z = GaussianInt.coerce(z)
    prime = GaussianInt.coerce(prime)
    if not z:
        raise DomainError("ord of 0 is undefined")
    if not is_gaussian_prime(prime):
        raise DomainError("%s is not a Gaussian prime" % prime)
    return _strip(z, canonicalize(prime)[1])[1]


def coprime(a, b) -> bool:
    return gcd(a, b).norm() == 1
