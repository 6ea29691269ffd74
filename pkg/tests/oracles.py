"""Reference computations that share no code path with the package under test.

They work on plain (re, im) tuples, complex floats, or Fractions, and are
deliberately slow and direct.
"""

from fractions import Fraction
from math import isqrt


def mul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def norm(x):
    return x[0] * x[0] + x[1] * x[1]


def divides(d, z):
    """d | z, checked by z * conj(d) being divisible by norm(d)."""
    n = norm(d)
    re = z[0] * d[0] + z[1] * d[1]
    im = z[1] * d[0] - z[0] * d[1]
    return re % n == 0 and im % n == 0


def lattice(max_norm):
    r = isqrt(max_norm)
    for a in range(-r, r + 1):
        for b in range(-r, r + 1):
            if a * a + b * b <= max_norm:
                yield (a, b)


def canonical_lattice(lo, hi):
    """All (a, b) with a > 0, b >= 0 and lo <= a^2 + b^2 <= hi, unsorted."""
    r = isqrt(hi)
    return [(a, b) for a in range(1, r + 1) for b in range(0, r + 1) if lo <= a * a + b * b <= hi]


def is_prime_by_trial(z):
    """z is prime iff no element of norm strictly between 1 and norm(z) divides it."""
    n = norm(z)
    if n <= 1:
        raise ValueError("zero or unit")
    for d in lattice(n - 1):
        if 1 < norm(d) < n and divides(d, z):
            return False
    return True


def canonical_divisors(z):
    """Canonical (first-quadrant) divisors of z found by lattice search."""
    n = norm(z)
    return [d for d in canonical_lattice(1, n) if n % norm(d) == 0 and divides(d, z)]


def r2(n):
    """Number of (a, b) in Z^2 with a^2 + b^2 = n, by direct count."""
    r = isqrt(n)
    return sum(1 for a in range(-r, r + 1) for b in range(-r, r + 1) if a * a + b * b == n)


def zeta_enclosure(s, terms):
    """Interval [lo, hi] containing zeta(s) from a partial sum and integral tails."""
    partial = sum(Fraction(1, n**s) for n in range(1, terms + 1))
    lo = partial + Fraction(1, (s - 1) * (terms + 1) ** (s - 1))
    hi = partial + Fraction(1, (s - 1) * terms ** (s - 1))
    return lo, hi


def beta_alternating(s, terms):
    """(partial sum, tail bound) of sum (-1)^n / (2n+1)^s over n < terms."""
    partial = 0.0
    for n in range(terms - 1, -1, -1):  # small terms first
        partial += (-1) ** n / (2 * n + 1) ** s
    return partial, 1.0 / (2 * terms + 1) ** s


def abundancy_complex(prime_powers, k):
    """I_k from (prime, exponent) pairs in floating point: prod sum_j p^(-jk)."""
    out = 1 + 0j
    for (a, b), e in prime_powers:
        p = complex(a, b)
        out *= sum(p ** (-j * k) for j in range(e + 1))
    return out
