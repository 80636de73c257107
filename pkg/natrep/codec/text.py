# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

"""Text forms: `[s0; s1, s2]` for sequences and `n/d` or `n` for ratios."""

import re
import typing as tp
from fractions import Fraction

from ..errors import ParseError, PoleError

_INT = r"[+-]?\d+"
_SEQUENCE = re.compile(rf"^\s*\[\s*({_INT})\s*(?:;\s*({_INT}(?:\s*,\s*{_INT})*)\s*)?\]\s*$")
_RATIO = re.compile(rf"^\s*({_INT})\s*(?:/\s*({_INT})\s*)?$")


def parse_sequence(text: str) -> tp.List[int]:
    """Entries of `[s0]` or `[s0; s1, ...]`; `[a, b, ...]` is accepted for standard continued fractions."""
    m = _SEQUENCE.match(text)
    if m is None:
        bare = re.match(rf"^\s*\[\s*({_INT}(?:\s*,\s*{_INT})*)\s*\]\s*$", text)
        if bare is None:
            raise ParseError(f"not a sequence: {text!r}")
        return [int(x) for x in bare.group(1).split(",")]
    head = [int(m.group(1))]
    if m.group(2) is None:
        return head
    return head + [int(x) for x in m.group(2).split(",")]


def format_sequence(entries: tp.Sequence[int]) -> str:
    head, rest = entries[0], entries[1:]
    if not rest:
        return f"[{head}]"
    return f"[{head}; " + ", ".join(str(x) for x in rest) + "]"


def parse_ratio(text: str) -> Fraction:
    m = _RATIO.match(text)
    if m is None:
        raise ParseError(f"not a ratio: {text!r}")
    n = int(m.group(1))
    d = int(m.group(2)) if m.group(2) is not None else 1
    if d == 0:
        raise PoleError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def format_ratio(q: Fraction) -> str:
    return str(q)
