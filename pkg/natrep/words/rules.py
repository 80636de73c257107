# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

"""The evaluation rules, each as a leftmost matcher on a word.

R8 is a structural law, not a rewrite: a pair followed by a tail t stands for
the pair of (l·t, r·t), and ◇ stands for the pair (1, ε). `lower` applies it,
and R6 relies on it when it looks through a pair entry that starts with another
pair. It never fires as a step, which keeps normal forms such as (ε,111)111111
in their factored shape.

R5 runs a division to the end in one step. Its single Euclid step,
n2(m2_V◇,0) → m◇n(n2_V◇,0)1◇2_V, keeps the value only while the numerator is
below half the denominator, and the rules that would carry the loop on from
there are not in the set. The match is replaced by the last divisor, sitting at
zero, followed by the route form of the quotient.
"""

import math
import typing as tp
from dataclasses import dataclass
from fractions import Fraction

from .word import DIAMOND, EMPTY, ONE, TWO_V, Pair, Word, is_integer_word, is_natural_word, natural_word


@dataclass(frozen=True)
class Match:
    start: int
    end: int
    replacement: Word


@dataclass(frozen=True)
class Rule:
    rule_id: str
    summary: str
    find: tp.Callable[[Word], tp.Optional[Match]]


def _find_literal(lhs: Word, rhs: Word) -> tp.Callable[[Word], tp.Optional[Match]]:
    width = len(lhs)

    def find(w: Word) -> tp.Optional[Match]:
        for i in range(len(w) - width + 1):
            if w[i:i + width] == lhs:
                return Match(i, i + width, rhs)
        return None

    return find


def _ones_before(w: Word, j: int) -> int:
    count = 0
    while j - count - 1 >= 0 and w[j - count - 1] is ONE:
        count += 1
    return count


def _split_ones(w: Word) -> tp.Tuple[int, Word]:
    """(number of leading ones, rest)."""
    n = 0
    while n < len(w) and w[n] is ONE:
        n += 1
    return n, w[n:]


def _find_r4(w: Word) -> tp.Optional[Match]:
    # m+2 ones, then (ε, m2_V)  →  (ε, m2_V) 1
    best = None
    for j, f in enumerate(w):
        if not isinstance(f, Pair) or f.left != EMPTY:
            continue
        m, rest = _split_ones(f.right)
        if rest != (TWO_V,):
            continue
        start = j - (m + 2)
        if start < 0 or _ones_before(w, j) < m + 2:
            continue
        if best is None or start < best.start:
            best = Match(start, j + 1, (f, ONE))
    return best


def _division(n: int, m: int) -> Word:
    """(m_k2_V◇, ε) s_k2_V ... s_0 for (2+n)/(2+m).

    The pair is the last divisor of the Euclid chain, sitting at zero with
    nothing left to multiply; the rest is the route form of the quotient.
    """
    from ..codec.ratcodec import HALF, encode
    from ..tree.sbtree import route_word

    q = Fraction(n + 2, m + 2)
    divisor = m + 2
    stage = q
    while stage.denominator != 1:
        divisor = stage.denominator
        frac = stage - math.floor(stage)
        stage = 1 / (1 - frac) - 2 if frac >= HALF else 1 / frac - 2
    return (Pair(natural_word(divisor - 2) + (TWO_V, DIAMOND), EMPTY),) + route_word(encode(q))


def _find_r5(w: Word) -> tp.Optional[Match]:
    # n+2 ones, then (m2_V◇, ε): the whole division, not a single Euclid step
    for j, f in enumerate(w):
        if not isinstance(f, Pair) or f.right != EMPTY:
            continue
        m, rest = _split_ones(f.left)
        if rest != (TWO_V, DIAMOND):
            continue
        run = _ones_before(w, j)
        if run < 2:
            continue
        return Match(j - run, j + 1, _division(run - 2, m))
    return None


def _find_r6(w: Word) -> tp.Optional[Match]:
    # a pair entry that starts with a pair keeps only that pair's second entry
    for j, f in enumerate(w):
        if not isinstance(f, Pair):
            continue
        if f.left and isinstance(f.left[0], Pair):
            inner = f.left[0]
            return Match(j, j + 1, (Pair(inner.right + f.left[1:], f.right),))
        if f.right and isinstance(f.right[0], Pair):
            inner = f.right[0]
            return Match(j, j + 1, (Pair(f.left, inner.right + f.right[1:]),))
    return None


def _find_r7(w: Word) -> tp.Optional[Match]:
    # 1(u, v): one step forward along the sequence
    for i in range(len(w) - 1):
        f = w[i + 1]
        if w[i] is not ONE or not isinstance(f, Pair):
            continue
        u, v = f.left, f.right
        if is_integer_word(u) and is_integer_word(v):
            replacement = (f,) + u + v
        elif is_natural_word(u) and is_natural_word(v):
            replacement = (f, DIAMOND) + u + (DIAMOND,) + v
        else:
            replacement = (f, Pair(u + (ONE,), u), Pair(v + (ONE,), v))
        return Match(i, i + 2, replacement)
    return None


def _find_r9(w: Word) -> tp.Optional[Match]:
    for j, f in enumerate(w):
        if (isinstance(f, Pair) and f.left and f.right
                and f.left[0] is DIAMOND and f.right[0] is DIAMOND):
            return Match(j, j + 1, (Pair(f.left[1:], f.right[1:]),))
    return None


RULES: tp.Tuple[Rule, ...] = (
    Rule("R1", "1◇1 → ◇", _find_literal((ONE, DIAMOND, ONE), (DIAMOND,))),
    Rule("R2", "◇◇ → ε", _find_literal((DIAMOND, DIAMOND), EMPTY)),
    Rule("R3", "◇2_V → 2_V◇1", _find_literal((DIAMOND, TWO_V), (TWO_V, DIAMOND, ONE))),
    Rule("R4", "m2(0,m2_V) → (0,m2_V)1", _find_r4),
    Rule("R5", "n2(m2_V◇,0) → (m_k2_V◇,0)s_k2_V⋯s_0", _find_r5),
    Rule("R6", "(x,(c,d)t) → (x,dt) and ((a,b)t,y) → (bt,y)", _find_r6),
    Rule("R7", "1(u,v) → one step of the sequence", _find_r7),
    Rule("R9", "(◇a,◇b) → (a,b)", _find_r9),
)

RULES_BY_ID = {rule.rule_id: rule for rule in RULES}
