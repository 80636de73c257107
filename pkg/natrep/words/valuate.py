# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

"""Numeric readings of words.

A pair-free word is cut at every 2_V into segments, rightmost first. Each
segment is read right to left as a walk that starts at 0 facing up: `1` moves
one step in the current direction and `◇` turns around. The segment to the
right of a 2_V sits below it as a reciprocal, so the whole word is the signed
continued fraction

    x0 + d0·h(x1 + d1·h(x2 + ... h(xk)))

where (xi, di) is where the walk of segment i ends and which way it faces, and
h(u) = 1/(2+u) for u ≥ 0 and 1 - 1/(2-u) below zero.

A word with pairs is read by its first pair: the prefix counts how many steps
the pair (a, b) takes along its arithmetic sequence, and the value is the term
reached. A prefix holding a 2_V has no reading.

`read_word` gives that reading for any word. `valuate` is stricter: it only
names a value for normal forms the tree parser recognizes, a natural word, an
integer word or the normal form of a route word, after dropping leading pairs
that sit at zero with nothing left to multiply.
"""

import typing as tp
from dataclasses import dataclass
from fractions import Fraction

from .engine import DEFAULT_MAX_STEPS, evaluate
from .word import (EMPTY, TWO_V, ONE, Pair, Word, division_word, format_word, has_pair, integer_value,
                   is_integer_word, is_natural_word)


def _h(u: Fraction) -> Fraction:
    if u >= 0:
        return 1 / (2 + u)
    return (1 - u) / (2 - u)


def _walk(segment: Word) -> tp.Tuple[int, int]:
    x, d = 0, 1
    for f in reversed(segment):
        if f is ONE:
            x += d
        else:
            d = -d
    return x, d


def segment_value(w: Word) -> Fraction:
    """Value of a pair-free word."""
    assert not any(isinstance(f, Pair) for f in w), f'segment_value needs a pair-free word, got {format_word(w)}'
    segments: tp.List[Word] = [()]
    for f in w:
        if f is TWO_V:
            segments.append(())
        else:
            segments[-1] = segments[-1] + (f,)
    walks = [_walk(seg) for seg in reversed(segments)]
    x0, d0 = walks[0]
    if len(walks) == 1:
        return Fraction(x0)
    below = _h(Fraction(walks[-1][0]))
    for x, d in reversed(walks[1:-1]):
        below = _h(x + d * below)
    return x0 + d0 * below


def read_word(w: Word) -> tp.Optional[Fraction]:
    """Value of any word, or None when it has no reading."""
    for j, f in enumerate(w):
        if isinstance(f, Pair):
            break
    else:
        return segment_value(w)
    prefix, tail = w[:j], w[j + 1:]
    if TWO_V in prefix:
        return None
    steps = segment_value(prefix)
    a = read_word(f.left + tail)
    b = read_word(f.right + tail)
    if a is None or b is None:
        return None
    return b + steps * (b - a)


def strip_spent(w: Word) -> Word:
    """Drop leading pairs (a, ε): nothing precedes them, so they stay at zero."""
    start = 0
    while start < len(w) and isinstance(w[start], Pair) and w[start].right == EMPTY:
        start += 1
    return w[start:]


def parse_normal_form(w: Word, max_steps: int = DEFAULT_MAX_STEPS) -> tp.Optional[Fraction]:
    """Value of a recognized normal form, else None."""
    from ..codec.ratcodec import encode
    from ..tree.sbtree import route_word

    rest = strip_spent(w)
    if is_natural_word(rest):
        return Fraction(len(rest))
    if is_integer_word(rest):
        return Fraction(integer_value(rest))
    if has_pair(rest):
        return None
    value = segment_value(rest)
    if evaluate(route_word(encode(value)), max_steps=max_steps) != rest:
        return None
    return value


def valuate(w: Word, max_steps: int = DEFAULT_MAX_STEPS) -> tp.Optional[Fraction]:
    """Value of the normal form of `w` through the tree parser; NonTerminating propagates."""
    return parse_normal_form(evaluate(w, max_steps=max_steps), max_steps=max_steps)


def as_natrep(w: Word, max_steps: int = DEFAULT_MAX_STEPS) -> tp.Optional[tp.List[int]]:
    from ..codec.ratcodec import encode

    value = valuate(w, max_steps=max_steps)
    if value is None:
        return None
    return encode(value)


@dataclass(frozen=True)
class DivisionReport:
    n: int
    m: int
    word: Word
    normal_form: Word
    expected: Fraction
    before: tp.Optional[Fraction]
    after: tp.Optional[Fraction]

    @property
    def preserved(self) -> bool:
        return self.before == self.after == self.expected


def division_report(n: int, m: int, max_steps: int = DEFAULT_MAX_STEPS) -> DivisionReport:
    """Reading of (2+n)/(2+m) before evaluation and valuation of its normal form."""
    w = division_word(n, m)
    normal = evaluate(w, max_steps=max_steps)
    return DivisionReport(n, m, w, normal, Fraction(2 + n, 2 + m), read_word(w),
                          parse_normal_form(normal, max_steps=max_steps))
