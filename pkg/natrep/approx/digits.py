# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

import logging
import math
import typing as tp
from dataclasses import dataclass
from fractions import Fraction

from ..codec.ratcodec import cf_convergents, cf_eval, decode, natrep_convergents
from ..errors import DomainError
from .surd import Surd

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)

CODECS = ("natural", "standard")


def _irrational(x: Surd) -> Surd:
    if x.is_rational:
        raise DomainError(f"{x} is rational; use the exact codecs instead")
    return x


def nat_digits(x: Surd, count: int) -> tp.List[int]:
    """First `count` entries of the natural representation of x."""
    assert count >= 1, f'count must be positive, got {count}'
    x = _irrational(x)
    out = []
    sign = 1
    while len(out) < count:
        floor = math.floor(x)
        frac = x - floor
        out.append(sign * (floor + 1))
        if frac < HALF:
            sign = -sign
            x = frac.reciprocal() - 2
        else:
            x = (1 - frac).reciprocal() - 2
    return out


def cf_digits(x: Surd, count: int) -> tp.List[int]:
    assert count >= 1, f'count must be positive, got {count}'
    x = _irrational(x)
    out = []
    while len(out) < count:
        a = math.floor(x)
        out.append(a)
        x = (x - a).reciprocal()
    return out


def digits(x: Surd, count: int, codec: str = "natural") -> tp.List[int]:
    if codec == "natural":
        return nat_digits(x, count)
    elif codec == "standard":
        return cf_digits(x, count)
    raise NotImplementedError(f'Unknown codec: {codec}')


def _value(prefix: tp.Sequence[int], codec: str) -> Fraction:
    if codec == "natural":
        return decode(prefix)
    elif codec == "standard":
        return cf_eval(prefix)
    raise NotImplementedError(f'Unknown codec: {codec}')


def convergent_error(x: Surd, prefix: tp.Sequence[int], codec: str = "natural") -> tp.Tuple[Fraction, Surd]:
    """(value of the prefix, |x - value|) with the error kept exact."""
    value = _value(prefix, codec)
    return value, abs(x - value)


def convergents(x: Surd, count: int, codec: str = "natural") -> tp.List[Fraction]:
    terms = digits(x, count, codec)
    if codec == "natural":
        return natrep_convergents(terms)
    return cf_convergents(terms)


@dataclass(frozen=True)
class ComparisonRow:
    k: int
    natural: Fraction
    natural_error: Surd
    standard: Fraction
    standard_error: Surd

    @property
    def natural_not_worse(self) -> bool:
        return self.natural_error <= self.standard_error


def compare_codecs(x: Surd, k: int) -> tp.List[ComparisonRow]:
    """The i-term natural convergent against the 2i-term standard one, for i = 1..k."""
    nat = convergents(x, k, "natural")
    std = convergents(x, 2 * k, "standard")
    rows = []
    for i in range(1, k + 1):
        a, b = nat[i - 1], std[2 * i - 1]
        rows.append(ComparisonRow(i, a, abs(x - a), b, abs(x - b)))
    logger.debug("compared %d convergents of %s", k, x)
    return rows
