"""Exact arithmetic in the Gaussian integers Z[i] and the field Q[i].

Values are immutable. ``GaussianInt`` wraps two Python ints, so components
have unbounded magnitude; ``GaussianRational`` keeps a canonical reduced
form with a positive rational-integer denominator, which makes equality
and hashing structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd as _igcd
from typing import Union

from gaussabund import _core
from gaussabund.errors import DomainError

__all__ = [
    "GaussianInt",
    "GaussianRational",
    "Unit",
    "ONE",
    "ZERO",
    "I",
    "parse_gaussian",
    "canonicalize",
    "is_canonical",
    "associates",
    "are_associates",
    "gcd",
    "divides",
    "exact_div",
    "round_div",
]

IntLike = Union[int, "GaussianInt"]

# Components below this bound go through the compiled gcd kernel.
_KERNEL_GCD_BOUND = 1 << 30


class GaussianInt:
    """An element ``re + im*i`` of Z[i]."""

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        if not (isinstance(re, int) and isinstance(im, int)):
            raise TypeError("GaussianInt components must be int, got %r, %r" % (re, im))
        object.__setattr__(self, "re", int(re))
        object.__setattr__(self, "im", int(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianInt is immutable")

    def __reduce__(self):
        return (GaussianInt, (self.re, self.im))

    @classmethod
    def coerce(cls, value) -> "GaussianInt":
        if isinstance(value, GaussianInt):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        if isinstance(value, str):
            return parse_gaussian(value)
        if isinstance(value, complex):
            if value.real != int(value.real) or value.imag != int(value.imag):
                raise DomainError("complex value %r has non-integral parts" % (value,))
            return cls(int(value.real), int(value.imag))
        raise TypeError("cannot convert %r to GaussianInt" % (value,))

    # ring operations

    def __add__(self, other):
        if isinstance(other, int):
            return GaussianInt(self.re + other, self.im)
        if isinstance(other, GaussianInt):
            return GaussianInt(self.re + other.re, self.im + other.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return GaussianInt(self.re - other, self.im)
        if isinstance(other, GaussianInt):
            return GaussianInt(self.re - other.re, self.im - other.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return GaussianInt(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussianInt(self.re * other, self.im * other)
        if isinstance(other, GaussianInt):
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussianInt(a * c - b * d, a * d + b * c)
        if isinstance(other, Unit):
            return other * self
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exp: int):
        if not isinstance(exp, int):
            return NotImplemented
        if exp < 0:
            raise DomainError("negative powers leave Z[i]; use GaussianRational")
        result = ONE
        base = self
        while exp:
            if exp & 1:
                result = result * base
            exp >>= 1
            if exp:
                base = base * base
        return result

    def __truediv__(self, other):
        return GaussianRational.from_int(self) / other

    def __rtruediv__(self, other):
        return GaussianRational.from_int(GaussianInt.coerce(other)) / self

    def conj(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_unit(self) -> bool:
        return self.norm() == 1

    def __bool__(self):
        return bool(self.re or self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianInt):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def sort_key(self):
        """Ordering used for prime lists and search output: (norm, re)."""
        return (self.norm(), self.re)

    def __repr__(self):
        return "GaussianInt(%d, %d)" % (self.re, self.im)

    def __str__(self):
        return format_gaussian(self.re, self.im)

    def __complex__(self):
        return complex(self.re, self.im)


class Unit:
    """A unit ``i**t`` of Z[i], stored by its exponent ``t`` mod 4."""

    __slots__ = ("t",)

    _VALUES = ((1, 0), (0, 1), (-1, 0), (0, -1))
    _NAMES = ("1", "i", "-1", "-i")

    def __init__(self, t: int = 0):
        object.__setattr__(self, "t", t % 4)

    def __setattr__(self, name, value):
        raise AttributeError("Unit is immutable")

    def __reduce__(self):
        return (Unit, (self.t,))

    @classmethod
    def from_value(cls, value) -> "Unit":
        g = GaussianInt.coerce(value)
        try:
            return cls(cls._VALUES.index((g.re, g.im)))
        except ValueError:
            raise DomainError("%s is not a unit" % g) from None

    @property
    def value(self) -> GaussianInt:
        return GaussianInt(*self._VALUES[self.t])

    def __mul__(self, other):
        if isinstance(other, Unit):
            return Unit(self.t + other.t)
        if isinstance(other, GaussianInt):
            return _rotate(other, self.t)
        if isinstance(other, int):
            return _rotate(GaussianInt(other), self.t)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exp: int):
        return Unit(self.t * exp)

    def inverse(self) -> "Unit":
        return Unit(-self.t)

    def __eq__(self, other):
        if isinstance(other, Unit):
            return self.t == other.t
        if isinstance(other, (GaussianInt, int)):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return "Unit(%d)" % self.t

    def __str__(self):
        return self._NAMES[self.t]

    def to_json(self) -> str:
        return "i^%d" % self.t

    @classmethod
    def from_json(cls, text: str) -> "Unit":
        m = re.fullmatch(r"\s*i\^([0-3])\s*", text)
        if not m:
            raise DomainError("bad unit literal %r" % text)
        return cls(int(m.group(1)))


def _rotate(z: GaussianInt, t: int) -> GaussianInt:
    t %= 4
    if t == 0:
        return z
    if t == 1:
        return GaussianInt(-z.im, z.re)
    if t == 2:
        return GaussianInt(-z.re, -z.im)
    return GaussianInt(z.im, -z.re)


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)


# text syntax

def format_gaussian(re_: int, im: int) -> str:
    if im == 0:
        return str(re_)
    if im == 1:
        imag = "i"
    elif im == -1:
        imag = "-i"
    else:
        imag = "%di" % im
    if re_ == 0:
        return imag
    if im > 0:
        return "%d+%s" % (re_, imag)
    return "%d%s" % (re_, imag)


_TERM = re.compile(r"([+-]?)(\d*)(i?)")


def parse_gaussian(text: str) -> GaussianInt:
    """Parse ``a``, ``bi``, ``a+bi`` or ``a-bi`` (spaces allowed)."""
    if not isinstance(text, str):
        raise TypeError("expected str, got %r" % (text,))
    s = "".join(text.split())
    if not s:
        raise DomainError("empty Gaussian integer literal")
    pos = 0
    re_part = im_part = 0
    seen_re = seen_im = False
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, digits, imag = m.groups()
        if m.end() == pos or (not digits and not imag):
            raise DomainError("cannot parse Gaussian integer %r" % text)
        if pos > 0 and not sign:
            raise DomainError("cannot parse Gaussian integer %r" % text)
        value = int(digits) if digits else 1
        if sign == "-":
            value = -value
        if imag:
            if seen_im:
                raise DomainError("repeated imaginary part in %r" % text)
            im_part, seen_im = value, True
        else:
            if seen_re or seen_im:
                raise DomainError("real part must come first in %r" % text)
            re_part, seen_re = value, True
        pos = m.end()
    return GaussianInt(re_part, im_part)


# associates

def is_canonical(z: GaussianInt) -> bool:
    """True iff ``z`` lies in the first quadrant: re > 0 and im >= 0."""
    return z.re > 0 and z.im >= 0


def canonicalize(z) -> tuple[Unit, GaussianInt]:
    """Split nonzero ``z`` as ``u * c`` with ``c`` the first-quadrant associate."""
    z = GaussianInt.coerce(z)
    a, b = z.re, z.im
    if a > 0 and b >= 0:
        return Unit(0), z
    if a <= 0 and b > 0:
        return Unit(1), GaussianInt(b, -a)
    if a < 0 and b <= 0:
        return Unit(2), GaussianInt(-a, -b)
    if a >= 0 and b < 0:
        return Unit(3), GaussianInt(-b, a)
    raise DomainError("zero has no canonical associate")


def associates(z: GaussianInt) -> list[GaussianInt]:
    return [_rotate(z, t) for t in range(4)]


def are_associates(a, b) -> bool:
    a, b = GaussianInt.coerce(a), GaussianInt.coerce(b)
    if not a or not b:
        return a == b
    return canonicalize(a)[1] == canonicalize(b)[1]


# division

def _round_div_int(x: int, n: int) -> int:
    """Nearest integer to x/n for n > 0; halves round toward zero."""
    q, r = divmod(x, n)
    twice = 2 * r
    if twice > n:
        return q + 1
    if twice == n and q < 0:
        return q + 1
    return q


def round_div(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    """Gaussian integer nearest to a/b, so that ``norm(a - q*b) <= norm(b)/2``."""
    n = b.norm()
    if n == 0:
        raise DomainError("division by zero")
    num = a * b.conj()
    return GaussianInt(_round_div_int(num.re, n), _round_div_int(num.im, n))


def divides(a, b) -> bool:
    """True iff ``a`` divides ``b`` in Z[i]."""
    a, b = GaussianInt.coerce(a), GaussianInt.coerce(b)
    n = a.norm()
    if n == 0:
        raise DomainError("divisibility by zero is undefined")
    num = b * a.conj()
    return num.re % n == 0 and num.im % n == 0


def exact_div(b, a) -> GaussianInt:
    """Return ``b / a``; raises DomainError unless ``a`` divides ``b``."""
    a, b = GaussianInt.coerce(a), GaussianInt.coerce(b)
    n = a.norm()
    if n == 0:
        raise DomainError("division by zero")
    num = b * a.conj()
    qr, rr = divmod(num.re, n)
    qi, ri = divmod(num.im, n)
    if rr or ri:
        raise DomainError("%s does not divide %s" % (a, b))
    return GaussianInt(qr, qi)


def _gcd_py(a: int, b: int, c: int, d: int) -> tuple[int, int]:
    x = GaussianInt(a, b)
    y = GaussianInt(c, d)
    while y:
        x, y = y, x - round_div(x, y) * y
    return x.re, x.im


def gcd(a, b) -> GaussianInt:
    """Canonical generator of the ideal (a, b), by the Euclidean algorithm."""
    a, b = GaussianInt.coerce(a), GaussianInt.coerce(b)
    if not a and not b:
        raise DomainError("gcd(0, 0) is undefined")
    bound = _KERNEL_GCD_BOUND
    if -bound < a.re < bound and -bound < a.im < bound and -bound < b.re < bound and -bound < b.im < bound:
        g = _core.gauss_gcd(a.re, a.im, b.re, b.im)
    else:
        g = _gcd_py(a.re, a.im, b.re, b.im)
    return canonicalize(GaussianInt(*g))[1]


class GaussianRational:
    """An element ``num / den`` of Q[i] with ``den > 0`` and content 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den: int = 1):
        num = GaussianInt.coerce(num)
        if not isinstance(den, int):
            raise TypeError("denominator must be int")
        if den == 0:
            raise DomainError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = _igcd(_igcd(num.re, num.im), den)
        if g > 1:
            num = GaussianInt(num.re // g, num.im // g)
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (self.num, self.den))

    @classmethod
    def from_int(cls, z) -> "GaussianRational":
        return cls(GaussianInt.coerce(z), 1)

    @classmethod
    def quotient(cls, a, b) -> "GaussianRational":
        """Exact ``a / b`` for Gaussian integers, rationalised by conj(b)."""
        a, b = GaussianInt.coerce(a), GaussianInt.coerce(b)
        n = b.norm()
        if n == 0:
            raise DomainError("division by zero")
        return cls(a * b.conj(), n)

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, Fraction):
            return cls(GaussianInt(value.numerator), value.denominator)
        return cls.from_int(value)

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.num, self.den)

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Unit):
            return GaussianRational(other * self.num, self.den)
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.num.norm()
        if n == 0:
            raise DomainError("zero has no inverse")
        return GaussianRational(self.num.conj() * self.den, n)

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, exp: int):
        if not isinstance(exp, int):
            return NotImplemented
        if exp < 0:
            return self.inverse() ** (-exp)
        return GaussianRational(self.num ** exp, self.den ** exp)

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.num.conj(), self.den)

    def norm(self) -> Fraction:
        return Fraction(self.num.norm(), self.den * self.den)

    @property
    def real(self) -> Fraction:
        return Fraction(self.num.re, self.den)

    @property
    def imag(self) -> Fraction:
        return Fraction(self.num.im, self.den)

    def is_integral(self) -> bool:
        return self.den == 1

    def to_gaussian_int(self) -> GaussianInt:
        if self.den != 1:
            raise DomainError("%s is not a Gaussian integer" % self)
        return self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.den == other.den and self.num == other.num
        if isinstance(other, (GaussianInt, int)):
            return self.den == 1 and self.num == other
        return NotImplemented

    def __hash__(self):
        if self.den == 1:
            return hash(self.num)
        return hash((self.num.re, self.num.im, self.den))

    def __repr__(self):
        return "GaussianRational(%r, %d)" % (self.num, self.den)

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        if self.num.re and self.num.im:
            return "(%s)/%d" % (self.num, self.den)
        return "%s/%d" % (self.num, self.den)

    def __complex__(self):
        return complex(self.num.re / self.den, self.num.im / self.den)

    def to_json(self) -> dict:
        return {"num": str(self.num), "den": str(self.den)}

    @classmethod
    def from_json(cls, obj: dict) -> "GaussianRational":
        return cls(parse_gaussian(obj["num"]), int(obj["den"]))
