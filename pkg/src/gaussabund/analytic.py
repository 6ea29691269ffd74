"""Certified values of zeta(s), beta(s) and the Dedekind zeta of Q(i), the
norm bound on I_k for k >= 2, and exact checks of the |z**n - 1| inequalities.

Real values are mpmath ``mpf`` numbers carried with an explicit absolute
error bound. Zeta and beta come from Euler-Maclaurin summation of the Hurwitz
zeta function; for real s > 1 the remainder after the last correction term is
bounded by the modulus of the first omitted term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mpf

from gaussabund.divfunc import abundancy
from gaussabund.errors import DomainError
from gaussabund.gint import GaussianInt
from gaussabund.gprimes import primes_by_norm

__all__ = [
    "ZetaValue",
    "LemmaCheck",
    "DEFAULT_PRECISION",
    "chi4",
    "zeta",
    "beta",
    "dedekind_zeta_qi",
    "dedekind_zeta_euler_product",
    "lemma_inequality_check",
    "abundancy_norm_bound",
    "mpf_to_fraction",
]

DEFAULT_PRECISION = 50
_GUARD_DIGITS = 20


@dataclass(frozen=True)
class ZetaValue:
    s: mpf
    value: mpf
    abs_error_bound: mpf

    @property
    def lower(self) -> mpf:
        return mpmath.fsub(self.value, self.abs_error_bound, exact=True)

    @property
    def upper(self) -> mpf:
        return mpmath.fadd(self.value, self.abs_error_bound, exact=True)

    def to_json(self, digits: int = 30) -> dict:
        return {
            "s": mpmath.nstr(self.s, digits),
            "value": mpmath.nstr(self.value, digits),
            "abs_error_bound": mpmath.nstr(self.abs_error_bound, 5),
        }

    def __str__(self):
        return "%s +/- %s" % (mpmath.nstr(self.value, 30), mpmath.nstr(self.abs_error_bound, 3))


def mpf_to_fraction(x: mpf) -> Fraction:
    """Exact rational value of a finite mpf."""
    man, exp = x.man_exp
    if exp >= 0:
        return Fraction(man * 2**exp)
    return Fraction(man, 2 ** (-exp))


def _to_mpf(s) -> mpf:
    if isinstance(s, Fraction):
        return mpf(s.numerator) / s.denominator
    return mpf(s)


def _check_s(s) -> None:
    if not s > 1:
        raise DomainError("s must exceed 1, got %s" % s)


def chi4(n: int) -> int:
    """The nontrivial Dirichlet character mod 4."""
    if n % 2 == 0:
        return 0
    return 1 if n % 4 == 1 else -1


def _hurwitz(s: mpf, a: mpf, digits: int) -> tuple[mpf, mpf]:
    """(value, remainder bound) for sum_{n>=0} (n+a)**-s by Euler-Maclaurin."""
    target = mpf(10) ** (-(digits + 5))
    cutoff = max(20, digits + 10)
    head = mpmath.fsum((n + a) ** (-s) for n in range(cutoff))
    x = cutoff + a
    tail = x ** (1 - s) / (s - 1) + x ** (-s) / 2
    rising = s  # s (s+1) ... (s+2j-2)
    xpow = x ** (-s - 1)
    xinv2 = 1 / (x * x)
    j = 1
    prev = None
    while True:
        term = mpmath.bernoulli(2 * j) / mpmath.factorial(2 * j) * rising * xpow
        if abs(term) < target:
            return head + tail, abs(term)
        if prev is not None and abs(term) >= abs(prev):
            # asymptotic series has turned; should not happen with this cutoff
            raise RuntimeError("Euler-Maclaurin terms stopped decreasing")
        tail += term
        prev = term
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        xpow *= xinv2
        j += 1


def zeta(s, precision: int = DEFAULT_PRECISION) -> ZetaValue:
    """Riemann zeta at real s > 1 with error below 10**-precision."""
    with mpmath.workdps(precision + _GUARD_DIGITS):
        s = _to_mpf(s)
        _check_s(s)
        value, bound = _hurwitz(s, mpf(1), precision)
        bound += mpf(10) ** (-(precision + 10))
        return ZetaValue(+s, +value, +bound)


def beta(s, precision: int = DEFAULT_PRECISION) -> ZetaValue:
    """Dirichlet beta sum_n chi4(n) n**-s = 4**-s (zeta(s, 1/4) - zeta(s, 3/4))."""
    with mpmath.workdps(precision + _GUARD_DIGITS):
        s = _to_mpf(s)
        _check_s(s)
        h1, e1 = _hurwitz(s, mpf(1) / 4, precision)
        h3, e3 = _hurwitz(s, mpf(3) / 4, precision)
        scale = mpf(4) ** (-s)
        value = scale * (h1 - h3)
        bound = scale * (e1 + e3) + mpf(10) ** (-(precision + 10))
        return ZetaValue(+s, +value, +bound)


def dedekind_zeta_qi(s, precision: int = DEFAULT_PRECISION) -> ZetaValue:
    """zeta_{Q(i)}(s) = zeta(s) * beta(s) with the product error propagated."""
    z = zeta(s, precision)
    b = beta(s, precision)
    with mpmath.workdps(precision + _GUARD_DIGITS):
        value = z.value * b.value
        bound = (
            abs(z.value) * b.abs_error_bound
            + abs(b.value) * z.abs_error_bound
            + z.abs_error_bound * b.abs_error_bound
            + mpf(10) ** (-(precision + 10))
        )
        return ZetaValue(z.s, +value, +bound)


def dedekind_zeta_euler_product(s, norm_limit: int, precision: int = 30) -> mpf:
    """Partial Euler product over Gaussian prime ideals of norm <= norm_limit."""
    if norm_limit < 2:
        raise DomainError("norm_limit must be at least 2")
    with mpmath.workdps(precision + _GUARD_DIGITS):
        s = _to_mpf(s)
        _check_s(s)
        # product of 1/(1 - N**-s) as exp(-sum log1p(-N**-s)); one log per ideal
        logs = []
        cache: dict[int, mpf] = {}
        for p in primes_by_norm(norm_limit):
            n = p.norm()
            term = cache.get(n)
            if term is None:
                term = cache[n] = mpmath.log1p(-mpf(n) ** (-s))
            logs.append(term)
        return +mpmath.exp(-mpmath.fsum(logs))


@dataclass(frozen=True)
class LemmaCheck:
    """Pass/fail of the three |z**n - 1| inequalities at one (z, n, m)."""

    geometric_sum_exceeds_top_power: bool
    shift_by_one: bool
    shift_by_m: bool

    def __iter__(self):
        return iter((self.geometric_sum_exceeds_top_power, self.shift_by_one, self.shift_by_m))

    def all(self) -> bool:
        return all(self)


def lemma_inequality_check(z, n: int, m: int) -> LemmaCheck:
    """Exact norm versions of, for Re z > 0 and ||z|| > 1:

    * ||1 + z + ... + z**n|| > ||z**n||            (n >= 1)
    * ||z**n - 1|| > ||z**n - z||                  (n >= 1)
    * ||z**n - 1|| >= ||z**n - z**m||, equal iff m == 0   (n >= m >= 0)
    """
    z = GaussianInt.coerce(z)
    if z.re <= 0 or z.norm() <= 1:
        raise DomainError("need Re(z) > 0 and ||z|| > 1, got %s" % z)
    if not (n >= 1 and n >= m >= 0):
        raise DomainError("need n >= 1 and n >= m >= 0, got n=%d, m=%d" % (n, m))
    zn = z**n
    geo = GaussianInt(1, 0)
    power = GaussianInt(1, 0)
    for _ in range(n):
        power = power * z
        geo = geo + power
    first = geo.norm() > zn.norm()
    left = (zn - 1).norm()
    second = left > (zn - z).norm()
    right = (zn - z**m).norm()
    third = left == right if m == 0 else left >= right
    return LemmaCheck(first, second, third)


def abundancy_norm_bound(z, k: int, precision: int = DEFAULT_PRECISION) -> bool:
    """True iff ||I_k(z)|| lies strictly below the certified upper value of
    zeta_{Q(i)}(k). Defined for k >= 2 only."""
    if not isinstance(k, int) or k < 2:
        raise DomainError("the zeta bound on ||I_k|| needs k >= 2, got %r" % (k,))
    return abundancy(z, k).norm() < zeta_qi_upper(k, precision)


_UPPER_CACHE: dict[tuple[int, int], Fraction] = {}


def zeta_qi_upper(k: int, precision: int = DEFAULT_PRECISION) -> Fraction:
    """value + error bound of zeta_{Q(i)}(k), as an exact rational."""
    key = (k, precision)
    if key not in _UPPER_CACHE:
        with mpmath.workdps(precision + _GUARD_DIGITS):
            _UPPER_CACHE[key] = mpf_to_fraction(dedekind_zeta_qi(k, precision).upper)
    return _UPPER_CACHE[key]
