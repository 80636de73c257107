# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

"""Overlapping symmetries of the tree levels and the group they generate.

f(x) = -1 - x mirrors every level around -1/2, g(x) = 1/x mirrors the
positive part around 1 and, partly, the part below zero around -1. Together
they generate a six element group whose third involution x ↦ -x/(1+x) mirrors
around 0 and -2.
"""

import bisect
import json
import typing as tp
from dataclasses import dataclass, field
from fractions import Fraction

from ..codec.ratcodec import check_valid
from ..errors import DomainError, PoleError
from .sbtree import DEFAULT_MAX_HEIGHT, level_values

ANCHORS = (Fraction(-2), Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1))


def negate(s: tp.Sequence[int]) -> tp.List[int]:
    check_valid(s)
    return [-x for x in s]


def f(x: Fraction) -> Fraction:
    return -1 - x


def g(x: Fraction) -> Fraction:
    if x == 0:
        raise PoleError("1/x is undefined at 0")
    return 1 / x


def sigma_zero(x: Fraction) -> Fraction:
    if x == -1:
        raise PoleError("-x/(1+x) is undefined at -1")
    return -x / (1 + x)


def symmetry_map(anchor: tp.Union[int, Fraction]) -> tp.Callable[[Fraction], Fraction]:
    anchor = Fraction(anchor)
    if anchor == Fraction(-1, 2):
        return f
    if anchor in (1, -1):
        return g
    if anchor in (0, -2):
        return sigma_zero
    raise DomainError(f"no symmetry is anchored at {anchor}; choose one of -2, -1, -1/2, 0, 1")


@dataclass
class SymmetryReport:
    anchor: Fraction
    height: int
    center_times_2: int
    pairs: tp.List[tp.Tuple[int, int, Fraction, Fraction]] = field(default_factory=list)
    span: tp.Optional[tp.Tuple[int, int]] = None
    span_values: tp.Optional[tp.Tuple[Fraction, Fraction]] = None

    def to_dict(self) -> dict:
        return {
            "anchor": str(self.anchor),
            "height": self.height,
            "center_times_2": self.center_times_2,
            "pairs": [{"i": i, "j": j, "value_i": str(a), "value_j": str(b)} for i, j, a, b in self.pairs],
            "span": list(self.span) if self.span is not None else None,
            "span_values": [str(v) for v in self.span_values] if self.span_values is not None else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def check_symmetry(anchor: tp.Union[int, Fraction], h: int,
                   max_height: int = DEFAULT_MAX_HEIGHT) -> SymmetryReport:
    """Pairs of level-h nodes mirrored around the anchor that the anchor's map swaps.

    The mirror is the anchor's position in the sorted level: its own index
    when it lies on the level, otherwise halfway between its neighbours.
    """
    anchor = Fraction(anchor)
    sigma = symmetry_map(anchor)
    if h < 2:
        raise DomainError(f"symmetries need a level of height at least 2, got {h}")
    values = level_values(h, max_height=max_height)
    below = bisect.bisect_left(values, anchor)
    upto = bisect.bisect_right(values, anchor)
    center_times_2 = below + upto - 1

    report = SymmetryReport(anchor, h, center_times_2)
    run: tp.List[tp.Tuple[int, int]] = []
    best: tp.List[tp.Tuple[int, int]] = []
    i = (center_times_2 - 1) // 2
    while i >= 0:
        j = center_times_2 - i
        if j >= len(values):
            break
        ok = _swapped(sigma, values[i], values[j])
        if ok:
            report.pairs.append((i, j, values[i], values[j]))
            run.append((i, j))
            if len(run) > len(best):
                best = list(run)
        else:
            run = []
        i -= 1

    if best:
        lo, hi = best[-1]
        report.span = (lo, hi)
        report.span_values = (values[lo], values[hi])
    return report


def _swapped(sigma: tp.Callable[[Fraction], Fraction], a: Fraction, b: Fraction) -> bool:
    try:
        return sigma(a) == b
    except PoleError:
        return False


# Each element of the group as a Möbius matrix (a, b, c, d): x ↦ (ax + b)/(cx + d).
_F = (-1, -1, 0, 1)
_G = (0, 1, 1, 0)
_ID = (1, 0, 0, 1)


def _compose(m: tp.Tuple[int, ...], n: tp.Tuple[int, ...]) -> tp.Tuple[int, ...]:
    """m ∘ n."""
    a, b, c, d = m
    p, q, r, s = n
    return _normalize((a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s))


def _normalize(m: tp.Tuple[int, ...]) -> tp.Tuple[int, ...]:
    lead = next(x for x in m if x != 0)
    return m if lead > 0 else tuple(-x for x in m)


GROUP: tp.Dict[str, tp.Tuple[int, ...]] = {
    "id": _normalize(_ID),
    "f": _normalize(_F),
    "g": _normalize(_G),
    "fg": _compose(_F, _G),
    "gf": _compose(_G, _F),
    "fgf": _compose(_compose(_F, _G), _F),
}


def composition_table() -> tp.Dict[str, tp.Dict[str, str]]:
    """table[a][b] names a ∘ b."""
    names = {m: name for name, m in GROUP.items()}
    return {a: {b: names[_compose(GROUP[a], GROUP[b])] for b in GROUP} for a in GROUP}


@dataclass
class D3Report:
    samples: int
    f_involution: bool
    g_involution: bool
    fg_order_three: bool
    fgf_is_gfg: bool
    fgf_is_sigma_zero: bool
    table: tp.Dict[str, tp.Dict[str, str]]

    @property
    def ok(self) -> bool:
        return self.f_involution and self.g_involution and self.fg_order_three \
            and self.fgf_is_gfg and self.fgf_is_sigma_zero


def d3_check(samples: tp.Iterable[Fraction]) -> D3Report:
    samples = [Fraction(x) for x in samples]
    for x in samples:
        if x in (0, -1):
            raise PoleError(f"{x} is a pole of the group action")

    def fg(x):
        return f(g(x))

    f_inv = all(f(f(x)) == x for x in samples)
    g_inv = all(g(g(x)) == x for x in samples)
    order3 = all(fg(fg(fg(x))) == x for x in samples)
    braid = all(f(g(f(x))) == g(f(g(x))) for x in samples)
    sigma = all(f(g(f(x))) == sigma_zero(x) for x in samples)
    return D3Report(len(samples), f_inv, g_inv, order3, braid, sigma, composition_table())
