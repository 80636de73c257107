# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

import logging
import typing as tp
from collections import deque
from dataclasses import dataclass

from ..errors import NonTerminating
from .rules import RULES
from .word import Pair, Word, format_word

logger = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 10 ** 5
DEFAULT_TRACE_TAIL = 10


@dataclass(frozen=True)
class TraceStep:
    index: int
    rule: str
    position: str
    word: Word

    def __str__(self):
        return f"step {self.index}: rule {self.rule} at pos {self.position}: {format_word(self.word)}"


Trace = tp.List[TraceStep]


def rewrite_step(w: Word) -> tp.Optional[tp.Tuple[Word, str, str]]:
    """One leftmost step of the highest-priority matching rule.

    Rules are tried in priority order on the top level of the word first. Only
    when nothing matches there does the search descend into pair entries, left
    factor first, left entry before right entry. Positions inside a pair read
    `<factor>.L.<pos>` or `<factor>.R.<pos>`.
    """
    for rule in RULES:
        match = rule.find(w)
        if match is not None:
            return w[:match.start] + match.replacement + w[match.end:], rule.rule_id, str(match.start)

    for j, f in enumerate(w):
        if not isinstance(f, Pair):
            continue
        inner = rewrite_step(f.left)
        if inner is not None:
            left, rule_id, pos = inner
            return w[:j] + (Pair(left, f.right),) + w[j + 1:], rule_id, f"{j}.L.{pos}"
        inner = rewrite_step(f.right)
        if inner is not None:
            right, rule_id, pos = inner
            return w[:j] + (Pair(f.left, right),) + w[j + 1:], rule_id, f"{j}.R.{pos}"
    return None


def evaluate(w: Word,
             max_steps: int = DEFAULT_MAX_STEPS,
             trace: bool = False,
             trace_tail: int = DEFAULT_TRACE_TAIL) -> tp.Union[Word, tp.Tuple[Word, Trace]]:
    """Rewrite to normal form.

    Returns the normal form, or `(normal_form, trace)` when `trace` is set.
    Raises NonTerminating with the last `trace_tail` steps once `max_steps`
    steps have been taken without reaching a normal form.
    """
    assert max_steps >= 1, f'max_steps must be positive, got {max_steps}'
    full: Trace = []
    tail: tp.Deque[TraceStep] = deque(maxlen=trace_tail)
    current = tuple(w)
    for index in range(1, max_steps + 1):
        step = rewrite_step(current)
        if step is None:
            logger.debug("normal form after %d steps: %s", index - 1, format_word(current))
            return (current, full) if trace else current
        current, rule_id, pos = step
        record = TraceStep(index, rule_id, pos, current)
        tail.append(record)
        if trace:
            full.append(record)

    if rewrite_step(current) is None:
        return (current, full) if trace else current
    raise NonTerminating(
        f"no normal form within {max_steps} steps starting from {format_word(w)}", tail=tuple(tail))
