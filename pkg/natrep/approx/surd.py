# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

"""Exact quadratic irrationals (p + q·√d)/r.

Floors and comparisons with rationals never touch floating point: the sign of
A + B·√d is settled by comparing A² with B²·d, and √d is bracketed with
`math.isqrt`.
"""

import functools
import math
import re
import typing as tp
from fractions import Fraction

from ..errors import DomainError, ParseError, PoleError

Number = tp.Union[int, Fraction, "Surd"]


def _square_free(d: int) -> tp.Tuple[int, int]:
    """(k, e) with d = k²·e and e square-free."""
    k, e = 1, d
    f = 2
    while f * f <= e:
        while e % (f * f) == 0:
            e //= f * f
            k *= f
        f += 1
    return k, e


def _sign_of(a: int, b: int, d: int) -> int:
    """Sign of a + b·√d."""
    if b == 0 or d == 0:
        return (a > 0) - (a < 0)
    if a >= 0 and b >= 0:
        return 1
    if a <= 0 and b <= 0:
        return -1
    lhs, rhs = a * a, b * b * d
    if a > 0:
        return (lhs > rhs) - (lhs < rhs)
    return (rhs > lhs) - (rhs < lhs)


@functools.total_ordering
class Surd:
    __slots__ = ("p", "q", "r", "d")

    def __init__(self, p: int, q: int, r: int = 1, d: int = 1):
        if r == 0:
            raise PoleError("surd with zero denominator")
        if d < 0:
            raise DomainError(f"only real square roots are supported, got √{d}")
        if d == 0:
            q, d = 0, 1
        k, d = _square_free(d)
        q *= k
        if d == 1:
            p, q = p + q, 0
        if r < 0:
            p, q, r = -p, -q, -r
        g = math.gcd(math.gcd(p, q), r)
        self.p, self.q, self.r, self.d = p // g, q // g, r // g, d

    @classmethod
    def sqrt(cls, d: int) -> "Surd":
        return cls(0, 1, 1, d)

    @classmethod
    def golden(cls) -> "Surd":
        return cls(1, 1, 2, 5)

    @classmethod
    def from_ratio(cls, x: tp.Union[int, Fraction]) -> "Surd":
        x = Fraction(x)
        return cls(x.numerator, 0, x.denominator, 1)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        assert self.is_rational, f'{self} is irrational'
        return Fraction(self.p, self.r)

    def _lift(self, other: Number) -> "Surd":
        if isinstance(other, Surd):
            if other.q != 0 and self.q != 0 and other.d != self.d:
                raise DomainError(f"cannot combine √{self.d} with √{other.d}")
            return other
        return Surd.from_ratio(other)

    def _radicand(self, other: "Surd") -> int:
        return self.d if self.q != 0 else other.d

    def __add__(self, other: Number) -> "Surd":
        o = self._lift(other)
        d = self._radicand(o)
        return Surd(self.p * o.r + o.p * self.r, self.q * o.r + o.q * self.r, self.r * o.r, d)

    __radd__ = __add__

    def __neg__(self) -> "Surd":
        return Surd(-self.p, -self.q, self.r, self.d)

    def __sub__(self, other: Number) -> "Surd":
        return self + (-self._lift(other))

    def __rsub__(self, other: Number) -> "Surd":
        return self._lift(other) - self

    def __mul__(self, other: Number) -> "Surd":
        o = self._lift(other)
        d = self._radicand(o)
        return Surd(self.p * o.p + self.q * o.q * d, self.p * o.q + self.q * o.p, self.r * o.r, d)

    __rmul__ = __mul__

    def reciprocal(self) -> "Surd":
        norm = self.p * self.p - self.q * self.q * self.d
        if norm == 0:
            raise PoleError(f"{self} has no reciprocal")
        return Surd(self.r * self.p, -self.r * self.q, norm, self.d)

    def __truediv__(self, other: Number) -> "Surd":
        return self * self._lift(other).reciprocal()

    def __rtruediv__(self, other: Number) -> "Surd":
        return self._lift(other) * self.reciprocal()

    def sign(self) -> int:
        return _sign_of(self.p, self.q, self.d)

    def __abs__(self) -> "Surd":
        return -self if self.sign() < 0 else self

    def __floor__(self) -> int:
        if self.q == 0:
            return self.p // self.r
        s = math.isqrt(self.q * self.q * self.d)
        if self.q > 0:
            return (self.p + s) // self.r
        return (self.p - s - 1) // self.r

    def __ceil__(self) -> int:
        return -math.floor(-self)

    def __eq__(self, other):
        if not isinstance(other, (int, Fraction, Surd)):
            return NotImplemented
        try:
            return (self - other).sign() == 0
        except DomainError:
            return False

    def __lt__(self, other):
        if not isinstance(other, (int, Fraction, Surd)):
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self):
        if self.q == 0:
            return hash(self.as_fraction())
        return hash((self.p, self.q, self.r, self.d))

    def __float__(self):
        return (self.p + self.q * math.sqrt(self.d)) / self.r

    def __repr__(self):
        return f"Surd({self.p}, {self.q}, {self.r}, {self.d})"

    def __str__(self):
        if self.q == 0:
            return str(Fraction(self.p, self.r))
        radical = f"√{self.d}" if abs(self.q) == 1 else f"{abs(self.q)}√{self.d}"
        sign = "-" if self.q < 0 else "+"
        head = f"{self.p} {sign} {radical}" if self.p else ("-" if self.q < 0 else "") + radical
        return head if self.r == 1 else f"({head})/{self.r}"


_SQRT = re.compile(r"^\s*sqrt\(\s*(\d+)\s*\)\s*$")


def parse_surd(text: str) -> Surd:
    """`sqrt(D)`, `phi`/`golden` or a plain ratio."""
    text = text.strip()
    if text.lower() in ("phi", "golden"):
        return Surd.golden()
    m = _SQRT.match(text)
    if m is not None:
        return Surd.sqrt(int(m.group(1)))
    try:
        return Surd.from_ratio(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a quadratic surd: {text!r}")
