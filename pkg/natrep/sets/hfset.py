# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

"""Hereditarily finite sets with structural interning.

Every set is built bottom-up through a process-wide intern table, so two
constructions of the same extensional set return the same object and equality
is identity. The table is guarded by a lock; reads need no lock.
"""

import logging
import threading
import typing as tp
from functools import lru_cache

from ..errors import ResourceError

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10 ** 6


class HFSet:
    """A canonical hereditarily finite set. Build with `from_elements`, never directly."""

    __slots__ = ("elements", "uid", "rank", "_text", "_sorted")

    def __init__(self, elements: tp.FrozenSet["HFSet"], uid: int, rank: int):
        self.elements = elements
        self.uid = uid
        self.rank = rank
        self._text = None
        self._sorted = None

    @property
    def text(self) -> str:
        """Canonical serialization: `{}` or `{a,b,...}` with children in canonical order."""
        if self._text is None:
            # post-order with an explicit stack; nesting depth is unbounded
            stack = [self]
            while stack:
                node = stack[-1]
                if node._text is not None:
                    stack.pop()
                    continue
                pending = [child for child in node.elements if child._text is None]
                if pending:
                    stack.extend(pending)
                    continue
                stack.pop()
                node._text = "{" + ",".join(child._text for child in node.children()) + "}"
        return self._text

    def sort_key(self) -> tp.Tuple[int, str]:
        return (self.rank, self.text)

    def children(self) -> tp.Tuple["HFSet", ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self.elements, key=HFSet.sort_key))
        return self._sorted

    def __iter__(self):
        return iter(self.children())

    def __len__(self):
        return len(self.elements)

    def __contains__(self, item):
        return item in self.elements

    def __repr__(self):
        return f"HFSet({self.text})"


class _InternTable:
    def __init__(self, node_budget: int = DEFAULT_NODE_BUDGET):
        self.node_budget = node_budget
        self._table: tp.Dict[tp.FrozenSet[HFSet], HFSet] = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._table)

    def intern(self, elements: tp.FrozenSet[HFSet]) -> HFSet:
        found = self._table.get(elements)
        if found is not None:
            return found
        with self._lock:
            found = self._table.get(elements)
            if found is None:
                if len(self._table) >= self.node_budget:
                    raise ResourceError(
                        f"hereditarily finite set budget of {self.node_budget} distinct sets exceeded")
                rank = 1 + max((e.rank for e in elements), default=-1)
                found = HFSet(elements, len(self._table), rank)
                self._table[elements] = found
        return found


_TABLE = _InternTable()


def set_node_budget(node_budget: int):
    assert node_budget >= 1, 'node_budget must be positive'
    _TABLE.node_budget = node_budget
    logger.debug("hfset node budget set to %d", node_budget)


def node_count() -> int:
    """Number of distinct sets interned so far in this process."""
    return len(_TABLE)


def from_elements(xs: tp.Iterable[HFSet]) -> HFSet:
    return _TABLE.intern(frozenset(xs))


def empty() -> HFSet:
    return from_elements(())


def singleton(x: HFSet) -> HFSet:
    return from_elements((x,))


def zermelo(n: int) -> HFSet:
    """Zermelo numeral: 0 = {}, n = {n-1}."""
    assert n >= 0, f'zermelo numerals are natural numbers, got {n}'
    acc = empty()
    for _ in range(n):
        acc = singleton(acc)
    return acc


def kuratowski(a: HFSet, b: HFSet) -> HFSet:
    """(a, b) = {{a}, {a, b}}."""
    return from_elements((singleton(a), from_elements((a, b))))


def diamond() -> HFSet:
    return kuratowski(zermelo(1), zermelo(0))


def two_v() -> HFSet:
    return from_elements((zermelo(0), zermelo(1)))


def integer_set(z: int) -> HFSet:
    if z >= 0:
        return substitute(diamond(), zermelo(z))
    acc = diamond()
    for _ in range(-z):
        acc = singleton(acc)
    return acc


@lru_cache(maxsize=1 << 18)
def substitute(a: HFSet, b: HFSet) -> HFSet:
    """ab: replace every occurrence of {} inside a by b.

    Walks the structure of `a` in post-order with an explicit stack, each
    shared subset rebuilt once.
    """
    done: tp.Dict[HFSet, HFSet] = {}
    stack = [a]
    while stack:
        node = stack[-1]
        if node in done:
            stack.pop()
            continue
        if not node.elements:
            done[node] = b
            stack.pop()
            continue
        pending = [x for x in node.elements if x not in done]
        if pending:
            stack.extend(pending)
            continue
        stack.pop()
        done[node] = from_elements(done[x] for x in node.elements)
    return done[a]


def transitive_closure(x: HFSet) -> tp.FrozenSet[HFSet]:
    seen: tp.Set[HFSet] = set()
    stack = list(x.elements)
    while stack:
        item = stack.pop()
        if item in seen:
            continue
        seen.add(item)
        stack.extend(item.elements)
    return frozenset(seen)


def is_constituent(c: HFSet, x: HFSet) -> bool:
    return c is x or c in transitive_closure(x)


def structure_edges(x: HFSet) -> tp.List[tp.Tuple[HFSet, HFSet]]:
    """Every membership pair within {x} and its transitive closure.

    Parents come highest rank first, children lowest first, ties broken by
    canonical text, so the listing is reproducible.
    """
    nodes = sorted(transitive_closure(x) | {x}, key=lambda s: (-s.rank, s.text))
    return [(parent, child) for parent in nodes for child in parent.children()]


def to_dot(x: HFSet) -> str:
    nodes = sorted(transitive_closure(x) | {x}, key=lambda s: (-s.rank, s.text))
    # ids follow canonical order, not interning order
    ids = {node: f"n{i}" for i, node in enumerate(nodes)}
    lines = ["digraph {"]
    for node in nodes:
        lines.append(f'  "{ids[node]}" [label="{node.text}"];')
    for parent, child in structure_edges(x):
        lines.append(f'  "{ids[parent]}" -> "{ids[child]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
