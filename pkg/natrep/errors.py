# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

import typing as tp


class NatRepError(Exception):
    """Base class for every error raised by natrep."""


class DomainError(NatRepError, ValueError):
    pass


class InvalidSequence(NatRepError, ValueError):
    pass


class PoleError(DomainError, ZeroDivisionError):
    pass


class RangeError(NatRepError, IndexError):
    pass


class ParseError(NatRepError, ValueError):
    pass


class ResourceError(NatRepError, MemoryError):
    pass


class NonTerminating(NatRepError, RuntimeError):
    """Raised when the rewrite budget runs out.

    `tail` holds the last trace steps so the caller can tell a divergent
    expression from a budget that was simply too small.
    """

    def __init__(self, message: str, tail: tp.Sequence[tp.Any] = ()):
        super().__init__(message)
        self.tail = list(tail)

    def __str__(self):
        lines = [super().__str__()]
        lines.extend(str(step) for step in self.tail)
        return "\n".join(lines)
