# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

r"""The extended Stern-Brocot tree over natural representations.

The root [0] has three children; every other node has two:

                         [0]
               /          |          \
           [-1]         [0;0]         [1]
           /  \         /   \         /  \
       [-2] [-1;0] [0;-1] [0;1]  [1;0]  [2]

Level h holds every valid sequence of height h, in value order, and the
children of the node at (h, i) are the nodes at (h+1, 2i) and (h+1, 2i+1).
"""

import enum
import functools
import logging
import typing as tp
from dataclasses import dataclass
from fractions import Fraction

from ..codec.ratcodec import check_valid, compare, decode, height
from ..codec.text import format_sequence
from ..errors import RangeError
from ..sets.hfset import transitive_closure
from ..words.engine import evaluate
from ..words.word import DIAMOND, ONE, TWO_V, Word, lower

logger = logging.getLogger(__name__)

DEFAULT_MAX_HEIGHT = 24

ROOT: tp.Tuple[int, ...] = (0,)


class EdgeLabel(enum.Enum):
    PLAIN = "1"
    DIAMOND_MARKED = "D"
    BRANCH = "DVD"


@dataclass(frozen=True)
class TreeNode:
    seq: tp.Tuple[int, ...]
    height: int
    index: int


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _seq(s: tp.Sequence[int]) -> tp.Tuple[int, ...]:
    check_valid(s)
    return tuple(s)


def children(s: tp.Sequence[int]) -> tp.List[tp.Tuple[tp.Tuple[int, ...], EdgeLabel]]:
    """Children in value order, each with the label of the edge reaching it."""
    s = _seq(s)
    if s == ROOT:
        return [((-1,), EdgeLabel.DIAMOND_MARKED), ((0, 0), EdgeLabel.BRANCH), ((1,), EdgeLabel.PLAIN)]
    last = s[-1]
    if last == 0:
        out = [(s[:-1] + (1,), EdgeLabel.DIAMOND_MARKED), (s[:-1] + (-1,), EdgeLabel.PLAIN)]
    else:
        out = [(s[:-1] + (last + _sign(last),), EdgeLabel.PLAIN), (s + (0,), EdgeLabel.BRANCH)]
    return sorted(out, key=functools.cmp_to_key(lambda a, b: compare(a[0], b[0])))


def parent(s: tp.Sequence[int]) -> tp.Optional[tp.Tuple[int, ...]]:
    s = _seq(s)
    if s == ROOT:
        return None
    last = s[-1]
    if len(s) == 1:
        return (last - _sign(last),)
    if last == 0:
        return s[:-1]
    if abs(last) == 1:
        return s[:-1] + (0,)
    return s[:-1] + (last - _sign(last),)


def path(s: tp.Sequence[int]) -> tp.List[tp.Tuple[int, ...]]:
    """Nodes from the root down to s, both included."""
    nodes = [_seq(s)]
    while True:
        up = parent(nodes[-1])
        if up is None:
            return nodes[::-1]
        nodes.append(up)


def _edge_label(up: tp.Tuple[int, ...], down: tp.Tuple[int, ...]) -> EdgeLabel:
    for child, label in children(up):
        if child == down:
            return label
    raise AssertionError(f'{down} is not a child of {up}')


def route(s: tp.Sequence[int]) -> tp.List[EdgeLabel]:
    nodes = path(s)
    return [_edge_label(up, down) for up, down in zip(nodes, nodes[1:])]


_BRANCH: Word = (DIAMOND, TWO_V, DIAMOND)
_BRANCH_FROM_NEGATIVE: Word = (DIAMOND, TWO_V)


def _edge_word(up: tp.Tuple[int, ...], down: tp.Tuple[int, ...]) -> Word:
    """Symbols prepended when walking from `up` to its child `down`.

    Inside the integer part a step outward is a 1, and the root's step to -1
    is 1◇. A branch is ◇2_V◇, except from a negative integer, whose trailing
    ◇ is already in the word. Below a branch, the step off a zero entry is 1◇
    when the new entry agrees in sign with the entry before it, else 1.
    """
    if len(down) > len(up):
        if len(up) == 1 and up[0] < 0:
            return _BRANCH_FROM_NEGATIVE
        return _BRANCH
    if up == ROOT:
        return (ONE, DIAMOND) if down == (-1,) else (ONE,)
    if len(down) >= 2 and up[-1] == 0:
        frame = 1 if len(down) == 2 else _sign(down[-2])
        return (ONE, DIAMOND) if frame * down[-1] > 0 else (ONE,)
    return (ONE,)


def route_word(s: tp.Sequence[int]) -> Word:
    nodes = path(s)
    w: Word = ()
    for up, down in zip(nodes, nodes[1:]):
        w = _edge_word(up, down) + w
    return w


def level_size(h: int) -> int:
    if h < 1:
        raise RangeError(f"levels start at 1, got {h}")
    return 1 if h == 1 else 3 * 2 ** (h - 2)


@functools.lru_cache(maxsize=32)
def _level(h: int) -> tp.Tuple[tp.Tuple[int, ...], ...]:
    if h == 1:
        return (ROOT,)
    below = _level(h - 1)
    out = [child for node in below for child, _ in children(node)]
    return tuple(sorted(out, key=functools.cmp_to_key(compare)))


def level(h: int, max_height: int = DEFAULT_MAX_HEIGHT) -> tp.List[tp.Tuple[int, ...]]:
    level_size(h)
    if h > max_height:
        raise RangeError(f"level {h} is above the enumeration limit {max_height}")
    logger.debug("enumerating level %d (%d nodes)", h, level_size(h))
    return list(_level(h))


def level_values(h: int, max_height: int = DEFAULT_MAX_HEIGHT) -> tp.List[Fraction]:
    return [decode(s) for s in level(h, max_height=max_height)]


def node_at(h: int, i: int) -> tp.Tuple[int, ...]:
    """Walk down from the root using the index bits."""
    size = level_size(h)
    if not 0 <= i < size:
        raise RangeError(f"index {i} outside level {h} of size {size}")
    if h == 1:
        return ROOT
    if h == 2:
        return children(ROOT)[i][0]
    return children(node_at(h - 1, i // 2))[i % 2][0]


def index_of(s: tp.Sequence[int]) -> tp.Tuple[int, int]:
    nodes = path(s)
    i = 0
    for up, down in zip(nodes, nodes[1:]):
        position = [child for child, _ in children(up)].index(down)
        i = position if up == ROOT else 2 * i + position
    return height(nodes[-1]), i


def tree_node(s: tp.Sequence[int]) -> TreeNode:
    h, i = index_of(s)
    return TreeNode(tuple(s), h, i)


def tree_edges(h: int, max_height: int = DEFAULT_MAX_HEIGHT) -> tp.List[tp.Tuple[tp.Tuple[int, ...], tp.Tuple[int, ...], EdgeLabel]]:
    """Every edge whose upper end lies on a level below h."""
    edges = []
    for k in range(1, h):
        for node in level(k, max_height=max_height):
            edges.extend((node, child, label) for child, label in children(node))
    return edges


def to_dot(h: int, max_height: int = DEFAULT_MAX_HEIGHT) -> str:
    lines = ["digraph {"]
    for k in range(1, h + 1):
        for node in level(k, max_height=max_height):
            lines.append(f'  "{format_sequence(node)}" [label="{decode(node)}"];')
    for up, down, label in tree_edges(h, max_height=max_height):
        lines.append(f'  "{format_sequence(up)}" -> "{format_sequence(down)}" [label="{label.value}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def mediant_parent_check(max_height: int = 10) -> tp.List[tp.Tuple[int, ...]]:
    """Positive nodes whose value is not the mediant of their nearest ancestors.

    Above [1] the bounds are 0/1 and 1/0, as in the classical tree. An empty
    list means the positive subtree is the Stern-Brocot tree.
    """
    failures = []
    for h in range(2, max_height + 1):
        for node in level(h):
            if node[0] < 1:
                continue
            v = decode(node)
            lo, hi = (0, 1), (1, 0)
            for ancestor in path(node)[1:-1]:
                a = decode(ancestor)
                if a < v and a * lo[1] > lo[0]:
                    lo = (a.numerator, a.denominator)
                elif a > v and (hi[1] == 0 or a * hi[1] < hi[0]):
                    hi = (a.numerator, a.denominator)
            if Fraction(lo[0] + hi[0], lo[1] + hi[1]) != v:
                failures.append(node)
    return failures


@dataclass
class ConstituencyReport:
    """Route prefixes against constituents of the sets the route words denote.

    `prefix_not_constituent` lists (s, t) where s is on the route to t but its
    set is not a constituent of t's; `constituent_not_prefix` counts the
    opposite case over ordered pairs of distinct nodes.
    """
    max_height: int
    evaluated: bool
    prefix_pairs: int
    prefix_not_constituent: tp.List[tp.Tuple[tp.Tuple[int, ...], tp.Tuple[int, ...]]]
    constituent_not_prefix: int


def prefix_constituency_report(max_height: int = 7, evaluated: bool = True) -> ConstituencyReport:
    """Compare route prefixes with constituents for every node up to `max_height`.

    With `evaluated` the sets come from the normal forms of the route words,
    otherwise from the route words as written.
    """
    nodes = [s for h in range(1, max_height + 1) for s in level(h)]
    sets = {}
    for s in nodes:
        w = route_word(s)
        sets[s] = lower(evaluate(w) if evaluated else w)
    prefix_pairs = 0
    missing = []
    extra = 0
    for t in nodes:
        prefixes = set(path(t)[:-1])
        closure = transitive_closure(sets[t])
        for s in nodes:
            if s == t:
                continue
            constituent = sets[s] is sets[t] or sets[s] in closure
            if s in prefixes:
                prefix_pairs += 1
                if not constituent:
                    missing.append((s, t))
            elif constituent:
                extra += 1
    logger.info("prefix constituency to height %d (%s): %d/%d prefixes not constituents, "
                "%d constituents not prefixes",
                max_height, "evaluated" if evaluated else "as written", len(missing), prefix_pairs, extra)
    return ConstituencyReport(max_height, evaluated, prefix_pairs, missing, extra)
