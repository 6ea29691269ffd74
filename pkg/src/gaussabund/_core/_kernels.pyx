# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_fallback.py`` for the reference semantics."""

from array import array
from libc.math cimport sqrt
from libc.stdlib cimport malloc, free, qsort


cdef inline long long _floor_div(long long x, long long n) nogil:
    cdef long long q = x / n
    if (x % n != 0) and ((x < 0) != (n < 0)):
        q -= 1
    return q


cdef inline long long _round_div(long long x, long long n) nogil:
    # n > 0; nearest integer, halves toward zero
    cdef long long q = _floor_div(x, n)
    cdef long long r = x - q * n
    if 2 * r > n or (2 * r == n and q < 0):
        return q + 1
    return q


def gauss_gcd(long long a, long long b, long long c, long long d):
    """Euclidean gcd of a+bi and c+di; components must be below 2**30."""
    cdef long long n, qr, qi, na, nb
    with nogil:
        while c != 0 or d != 0:
            n = c * c + d * d
            qr = _round_div(a * c + b * d, n)
            qi = _round_div(b * c - a * d, n)
            na = a - (qr * c - qi * d)
            nb = b - (qr * d + qi * c)
            a = c
            b = d
            c = na
            d = nb
    return a, b


cdef Py_ssize_t _isqrt(Py_ssize_t n) nogil:
    cdef Py_ssize_t r = <Py_ssize_t> sqrt(<double> n)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


def prime_sieve(Py_ssize_t limit):
    if limit < 1:
        return bytearray(max(limit + 1, 0))
    table = bytearray([1]) * (limit + 1)
    cdef unsigned char[::1] t = table
    cdef Py_ssize_t p, m, root = _isqrt(limit)
    t[0] = 0
    t[1] = 0
    with nogil:
        for p in range(2, root + 1):
            if t[p]:
                m = p * p
                while m <= limit:
                    t[m] = 0
                    m += p
    return table


def smallest_factor_table(Py_ssize_t limit):
    spf = array("I", bytes(4 * (limit + 1)))
    cdef unsigned int[::1] s = spf
    cdef Py_ssize_t n, p, m, root = _isqrt(limit)
    with nogil:
        for n in range(limit + 1):
            s[n] = <unsigned int> n
        for p in range(2, root + 1):
            if s[p] == p:
                m = p * p
                while m <= limit:
                    if s[m] == m:
                        s[m] = <unsigned int> p
                    m += p
    return spf


cdef struct _Point:
    long long norm
    long long a
    long long b


cdef int _cmp_point(const void* x, const void* y) noexcept nogil:
    cdef const _Point* p = <const _Point*> x
    cdef const _Point* q = <const _Point*> y
    if p.norm != q.norm:
        return -1 if p.norm < q.norm else 1
    if p.b != q.b:
        return -1 if p.b < q.b else 1
    return 0


def canonical_pairs(long long norm_lo, long long norm_hi):
    if norm_hi < 1:
        return []
    if norm_lo < 1:
        norm_lo = 1
    cdef long long a, b, aa, b_lo, b_hi, root = _isqrt(norm_hi)
    cdef Py_ssize_t count = 0, k
    for a in range(1, root + 1):
        aa = a * a
        b_lo = 0 if aa >= norm_lo else _isqrt(norm_lo - aa - 1) + 1
        b_hi = _isqrt(norm_hi - aa)
        if b_hi >= b_lo:
            count += b_hi - b_lo + 1
    cdef _Point* pts = <_Point*> malloc(max(count, 1) * sizeof(_Point))
    if pts == NULL:
        raise MemoryError()
    k = 0
    try:
        for a in range(1, root + 1):
            aa = a * a
            b_lo = 0 if aa >= norm_lo else _isqrt(norm_lo - aa - 1) + 1
            b_hi = _isqrt(norm_hi - aa)
            b = b_lo
            while b <= b_hi:
                pts[k].norm = aa + b * b
                pts[k].a = a
                pts[k].b = b
                k += 1
                b += 1
        qsort(pts, count, sizeof(_Point), _cmp_point)
        return [(pts[k].a, pts[k].b) for k in range(count)]
    finally:
        free(pts)
