# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

"""Expression words over the generators 1, ◇, 2_V and ordered pairs.

A word is an immutable tuple of factors read right to left: the rightmost
factor is applied to the empty set first, and each factor to its left is
substituted around the result. Concatenation is therefore substitution of sets.
"""

import enum
import typing as tp
from dataclasses import dataclass

from ..errors import ParseError
from ..sets import hfset


class Symbol(enum.Enum):
    ONE = "1"
    DIAMOND = "D"
    TWO_V = "V"

    def __repr__(self):
        return f"Symbol.{self.name}"


ONE = Symbol.ONE
DIAMOND = Symbol.DIAMOND
TWO_V = Symbol.TWO_V


@dataclass(frozen=True)
class Pair:
    left: "Word"
    right: "Word"

    def __post_init__(self):
        if not isinstance(self.left, tuple) or not isinstance(self.right, tuple):
            raise TypeError("Pair entries must be words (tuples of factors)")


Factor = tp.Union[Symbol, Pair]
Word = tp.Tuple[Factor, ...]

EMPTY: Word = ()

_UNICODE = {ONE: "1", DIAMOND: "◇", TWO_V: "2_V"}


def concat(*words: Word) -> Word:
    out: Word = ()
    for w in words:
        out = out + tuple(w)
    return out


def natural_word(n: int) -> Word:
    assert n >= 0, f'natural words need n >= 0, got {n}'
    return (ONE,) * n


def int_word(z: int) -> Word:
    """+n is ◇n, -n is n◇, 0 is ◇."""
    if z >= 0:
        return (DIAMOND,) + (ONE,) * z
    return (ONE,) * (-z) + (DIAMOND,)


def expr_add_int(x: Word, y: Word) -> Word:
    """"x + y" is y◇x."""
    return concat(y, (DIAMOND,), x)


def expr_sub_int(x: Word, y: Word) -> Word:
    """"x - y" is ◇yx."""
    return concat((DIAMOND,), y, x)


def mul_start(b: Word) -> Word:
    """"(1+⋯)×b" is (◇, b)."""
    return (Pair((DIAMOND,), tuple(b)),)


def close(e: Word) -> Word:
    """(e1, e): a downward sequence sitting at the value of e."""
    e = tuple(e)
    return (Pair(e + (ONE,), e),)


def multiplication_word(n: int, m: int) -> Word:
    """n×m as n-1 steps of the sequence started by mul_start(int_word(m))."""
    assert n >= 1, f'multiplication_word needs n >= 1, got {n}'
    return concat(natural_word(n - 1), mul_start(int_word(m)))


def division_word(n: int, m: int) -> Word:
    """"(⋯+2+n)×1/(2+m)" is n2(m2_V◇, 0)."""
    assert n >= 0 and m >= 0, f'division_word needs naturals, got {n}, {m}'
    return natural_word(n + 2) + (Pair(natural_word(m) + (TWO_V, DIAMOND), EMPTY),)


def integer_part_word(m: int) -> Word:
    """m2(0, m2_V): 2+m steps of the sequence (0, 1/(2+m))."""
    assert m >= 0, f'integer_part_word needs m >= 0, got {m}'
    return natural_word(m + 2) + (Pair(EMPTY, natural_word(m) + (TWO_V,)),)


def _relative_entry(entries: tp.Sequence[int], i: int) -> Word:
    s = entries[i]
    before = 1 if i == 1 else (entries[i - 1] > 0) - (entries[i - 1] < 0)
    keeps_sign = s * before > 0
    body = (ONE,) * abs(s) + ((DIAMOND,) if keeps_sign else ())
    inner = (DIAMOND,) if i < len(entries) - 1 else ()
    return inner + body + (DIAMOND,)


def rational_open_word(entries: tp.Sequence[int], convention: str = "integer") -> Word:
    """s_k 2_V ... s_1 2_V s_0.

    "integer" writes every s_i as int_word. "route" writes s_0 as int_word and
    each later entry against the sign of the entry before it (s_1 against +):
    |s|◇ when the sign is kept, |s| when it turns, framed by ◇ on both sides
    except that the outermost entry has none on its left. That convention
    spells out route_word exactly.
    """
    entries = list(entries)
    if convention == "integer":
        parts = [int_word(s) for s in entries]
    elif convention == "route":
        if len(entries) == 1:
            s = entries[0]
            return natural_word(s) if s >= 0 else int_word(s)
        parts = [int_word(entries[0])] + [_relative_entry(entries, i) for i in range(1, len(entries))]
    else:
        raise NotImplementedError(f'Unknown open form convention: {convention}')
    out: Word = ()
    for i, part in enumerate(parts):
        out = part + ((TWO_V,) if i else ()) + out
    return out


def is_natural_word(w: Word) -> bool:
    return all(f is ONE for f in w)


def is_integer_word(w: Word) -> bool:
    """True for exactly the shapes produced by int_word."""
    if not w or w.count(DIAMOND) != 1 or any(isinstance(f, Pair) or f is TWO_V for f in w):
        return False
    return w[0] is DIAMOND or w[-1] is DIAMOND


def integer_value(w: Word) -> int:
    assert is_integer_word(w), f'not an integer word: {format_word(w)}'
    if w[0] is DIAMOND:
        return len(w) - 1
    return -(len(w) - 1)


def has_pair(w: Word) -> bool:
    return any(isinstance(f, Pair) for f in w)


def _factor_set(f: Factor) -> hfset.HFSet:
    if f is ONE:
        return hfset.zermelo(1)
    elif f is DIAMOND:
        return hfset.diamond()
    elif f is TWO_V:
        return hfset.two_v()
    return hfset.kuratowski(lower(f.left), lower(f.right))


def lower(w: Word) -> hfset.HFSet:
    """The set a word denotes.

    A pair followed by a tail t lowers as (l·t, r·t); substituting the tail into
    the lowered pair computes exactly that.
    """
    acc = hfset.empty()
    for f in reversed(w):
        acc = hfset.substitute(_factor_set(f), acc)
    return acc


def format_word(w: Word, unicode: bool = False) -> str:
    parts = []
    for f in w:
        if isinstance(f, Pair):
            parts.append(f"({format_word(f.left, unicode)},{format_word(f.right, unicode)})")
        elif unicode:
            parts.append(_UNICODE[f])
        else:
            parts.append(f.value)
    return "".join(parts)


class _WordParser:
    """Recursive descent over `1`, `D`, `V`, `(w,w)` with optional whitespace."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse_word(self) -> Word:
        factors = []
        while True:
            c = self._peek()
            if c in ("1", "D", "V"):
                factors.append(Symbol(c))
                self.pos += 1
            elif c == "(":
                self.pos += 1
                left = self.parse_word()
                self._expect(",")
                right = self.parse_word()
                self._expect(")")
                factors.append(Pair(left, right))
            else:
                return tuple(factors)

    def _expect(self, c: str):
        if self._peek() != c:
            raise ParseError(f"expected {c!r} at position {self.pos} in word {self.text!r}")
        self.pos += 1


def parse_word(text: str) -> Word:
    parser = _WordParser(text)
    w = parser.parse_word()
    if parser._peek():
        raise ParseError(f"unexpected {parser._peek()!r} at position {parser.pos} in word {text!r}")
    return w
