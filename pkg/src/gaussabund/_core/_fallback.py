"""Pure-Python versions of the compiled kernels in ``_kernels.pyx``.

Each function here has the same signature and return type as its compiled
counterpart; ``gaussabund._core`` picks one set at import time.
"""

from array import array
from math import isqrt


def _round_div(x, n):
    q, r = divmod(x, n)
    if 2 * r > n or (2 * r == n and q < 0):
        return q + 1
    return q


def gauss_gcd(a, b, c, d):
    """Euclidean gcd of a+bi and c+di with nearest-integer quotients."""
    while c or d:
        n = c * c + d * d
        qr = _round_div(a * c + b * d, n)
        qi = _round_div(b * c - a * d, n)
        a, b, c, d = c, d, a - (qr * c - qi * d), b - (qr * d + qi * c)
    return a, b


def prime_sieve(limit):
    """Byte table with ``table[n] == 1`` iff n is prime, for 0 <= n <= limit."""
    if limit < 1:
        return bytearray(max(limit + 1, 0))
    table = bytearray([1]) * (limit + 1)
    table[0] = 0
    table[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if table[p]:
            table[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return table


def smallest_factor_table(limit):
    """``spf[n]`` is the least prime factor of n (0 and 1 map to themselves)."""
    spf = array("I", range(limit + 1))
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:
            for m in range(p * p, limit + 1, p):
                if spf[m] == m:
                    spf[m] = p
    return spf


def canonical_pairs(norm_lo, norm_hi):
    """All (re, im) with re > 0, im >= 0 and norm_lo <= re^2+im^2 <= norm_hi,
    sorted by (norm, im): within a norm, smaller imaginary part first."""
    out = []
    if norm_hi < 1:
        return out
    norm_lo = max(norm_lo, 1)
    for a in range(1, isqrt(norm_hi) + 1):
        aa = a * a
        b_lo = 0 if aa >= norm_lo else isqrt(norm_lo - aa - 1) + 1
        b_hi = isqrt(norm_hi - aa)
        for b in range(b_lo, b_hi + 1):
            out.append((aa + b * b, b, a))
    out.sort()
    return [(a, b) for _, b, a in out]
