# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

"""Exact codecs between rationals and integer sequences.

Three families live here: the non-negative sequence (every reciprocal added to
2 with a natural number), the signed sequence that flips direction whenever the
numerator passes half the denominator, and the full natural representation
[s0; s1, ..., sk] that carries the integer part in front. The standard
continued fraction is kept alongside for comparison.

All arithmetic is on `fractions.Fraction` and Python integers, so nothing here
overflows. The fixed-width fast paths live in `natrep.bench.fastpath`.
"""

import math
import typing as tp
from fractions import Fraction

from ..errors import DomainError, InvalidSequence

Ratio = Fraction
NatRep = tp.List[int]

LESS, EQUAL, GREATER = -1, 0, 1

HALF = Fraction(1, 2)


def as_ratio(q: tp.Union[int, Fraction, str]) -> Ratio:
    return q if isinstance(q, Fraction) else Fraction(q)


def _check_proper(n: int, d: int):
    if not (0 < n < d):
        raise DomainError(f"need 0 < n < d, got {n}/{d}")
    if math.gcd(n, d) != 1:
        raise DomainError(f"{n}/{d} is not in lowest terms")


def encode_nonneg(n: int, d: int) -> tp.List[int]:
    """m1..mk with n/d = 1/(2 + m1 - 1/(2 + m2 - ...)), every mi ≥ 0."""
    _check_proper(n, d)
    ms = []
    while n != 1:
        m = d // n - 1
        ms.append(m)
        n, d = (2 + m) * n - d, n
    ms.append(d - 2)
    return ms


def eval_nonneg(ms: tp.Sequence[int]) -> Ratio:
    value = Fraction(0)
    for m in reversed(ms):
        value = 1 / (2 + m - value)
    return value


def encode_signed(n: int, d: int) -> tp.List[int]:
    """s1..sk for 0 < n/d < 1.

    A step that would be zero instead replaces n by d - n and flips the sign
    of every later entry.
    """
    _check_proper(n, d)
    sign = 1
    ss = []
    while True:
        if n == 1:
            ss.append(sign * (d - 2))
            return ss
        s = d // n - 1
        if s == 0:
            sign = -sign
            n = d - n
            continue
        ss.append(sign * s)
        n, d = (2 + s) * n - d, n


def _flips(ss: tp.Sequence[int]) -> tp.List[bool]:
    """Which entries are read as 1 - (...) once earlier flips are applied."""
    out = []
    sign = 1
    for s in ss:
        flipped = sign * s < 0
        if flipped:
            sign = -sign
        out.append(flipped)
    return out


def eval_signed(ss: tp.Sequence[int]) -> Ratio:
    if any(s == 0 for s in ss[:-1]):
        raise InvalidSequence(f"interior entries must be nonzero: {list(ss)}")
    value = Fraction(0)
    for s, flipped in zip(reversed(ss), reversed(_flips(ss))):
        value = 1 / (2 + abs(s) - value)
        if flipped:
            value = 1 - value
    return value


def is_valid(entries: tp.Sequence[int]) -> bool:
    if not entries:
        return False
    if not all(isinstance(s, int) and not isinstance(s, bool) for s in entries):
        return False
    return all(s != 0 for s in entries[1:-1])


def check_valid(entries: tp.Sequence[int]):
    if not is_valid(entries):
        raise InvalidSequence(f"not a natural representation: {list(entries)}")


def height(s: tp.Sequence[int]) -> int:
    check_valid(s)
    return len(s) + sum(abs(x) for x in s)


def encode(q: tp.Union[int, Fraction]) -> NatRep:
    """[s0; s1..sk] of any rational.

    An integer is itself. Otherwise s0 = ⌈q⌉; the rest encodes 1/frac - 2 with
    every sign flipped when frac < 1/2, and 1/(1 - frac) - 2 as is when
    frac ≥ 1/2.
    """
    q = as_ratio(q)
    out = []
    sign = 1
    while True:
        floor = q.numerator // q.denominator
        frac = q - floor
        if frac == 0:
            out.append(sign * floor)
            return out
        out.append(sign * (floor + 1))
        if frac < HALF:
            sign = -sign
            q = 1 / frac - 2
        else:
            q = 1 / (1 - frac) - 2


def decode(s: tp.Sequence[int]) -> Ratio:
    check_valid(s)
    return s[0] - eval_signed(s[1:])


def cf_encode(q: tp.Union[int, Fraction]) -> tp.List[int]:
    """Standard continued fraction; the last term is at least 2 unless it is the only one."""
    q = as_ratio(q)
    n, d = q.numerator, q.denominator
    out = []
    while True:
        a, r = divmod(n, d)
        out.append(a)
        if r == 0:
            return out
        n, d = d, r


def cf_eval(terms: tp.Sequence[int]) -> Ratio:
    if not terms:
        raise InvalidSequence("empty continued fraction")
    if any(a < 1 for a in terms[1:]):
        raise InvalidSequence(f"partial quotients after the first must be positive: {list(terms)}")
    value = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        value = a + 1 / value
    return value


def cf_normalize(terms: tp.Sequence[int]) -> tp.List[int]:
    """Fold a trailing 1 into its predecessor: [..., a, 1] is [..., a + 1]."""
    out = list(terms)
    if len(out) > 1 and out[-1] == 1:
        out.pop()
        out[-1] += 1
    return out


def compare(a: tp.Sequence[int], b: tp.Sequence[int]) -> int:
    """LESS, EQUAL or GREATER, in the order of the values the sequences encode."""
    check_valid(a)
    check_valid(b)
    for x, y in zip(a, b):
        if x != y:
            return LESS if x < y else GREATER
    if len(a) == len(b):
        return EQUAL
    if len(a) < len(b):
        return _prefix_order(a)
    return -_prefix_order(b)


def _prefix_order(prefix: tp.Sequence[int]) -> int:
    n = len(prefix) - 1
    last = prefix[-1]
    if n == 0 or last > 0:
        return GREATER
    if last < 0:
        return LESS
    raise InvalidSequence(f"{list(prefix)} ends in zero and cannot be a proper prefix of a valid sequence")


def natrep_convergents(s: tp.Sequence[int]) -> tp.List[Ratio]:
    """decode of every prefix [s0], [s0; s1], ..., s."""
    check_valid(s)
    return [decode(s[:i + 1]) for i in range(len(s))]


def cf_convergents(terms: tp.Sequence[int]) -> tp.List[Ratio]:
    if not terms:
        raise InvalidSequence("empty continued fraction")
    p_prev, p = 1, terms[0]
    q_prev, q = 0, 1
    out = [Fraction(p, q)]
    for a in terms[1:]:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        out.append(Fraction(p, q))
    return out


def reference_encode(f: tp.Union[int, Fraction]) -> NatRep:
    """Readable recursive encoder, kept as an oracle for `encode`."""
    f = as_ratio(f)
    integer_part = math.floor(f)
    if f == integer_part:
        return [integer_part]
    fractional_part = f - integer_part
    if fractional_part >= HALF:
        return [integer_part + 1] + reference_encode(1 / (1 - fractional_part) - 2)
    rest = reference_encode(1 / fractional_part - 2)
    return [integer_part + 1] + [-x for x in rest]


def reference_decode(sequence: tp.Sequence[int]) -> Ratio:
    """Readable recursive decoder, kept as an oracle for `decode`."""
    rest = list(sequence[1:])
    if not rest:
        return Fraction(sequence[0])
    if rest[0] >= 0:
        return sequence[0] - Fraction(1, 1) / (2 + reference_decode(rest))
    return sequence[0] - 1 + Fraction(1, 1) / (2 + reference_decode([-x for x in rest]))


def examples_table(max_numerator: int, max_denominator: int) -> tp.List[tp.Tuple[Ratio, NatRep, Ratio]]:
    """(q, encode(q), decode(encode(q))) for every reduced ±n/d within the limits."""
    rows = []
    for n in range(-max_numerator, max_numerator + 1):
        for d in range(1, max_denominator + 1):
            if math.gcd(n, d) == 1:
                q = Fraction(n, d)
                s = encode(q)
                rows.append((q, s, decode(s)))
    return rows
