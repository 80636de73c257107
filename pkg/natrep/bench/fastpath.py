# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

"""Fixed-width codec loops for the Fibonacci benchmark.

Each loop mirrors a C routine working on unsigned 64-bit numerators and
denominators, and reports how many times its main loop ran. Inputs are
non-negative ratios num/den; the natural loops only handle values in [0, ∞)
which is all the benchmark feeds them.
"""

import typing as tp
from fractions import Fraction

from ..codec.ratcodec import reference_decode, reference_encode
from ..errors import PoleError, RangeError

U64_MAX = (1 << 64) - 1

Encoded = tp.Tuple[tp.List[int], int]
Decoded = tp.Tuple[int, int, int]


def _check_u64(num: int, den: int):
    if den == 0:
        raise PoleError(f"{num}/0 has no representation")
    if not (0 <= num <= U64_MAX and 0 < den <= U64_MAX):
        raise RangeError(f"{num}/{den} does not fit in unsigned 64-bit arithmetic")


def cf_encode_u64(num: int, den: int) -> Encoded:
    _check_u64(num, den)
    out = []
    iterations = 0
    while den > 1:
        iterations += 1
        q, r = divmod(num, den)
        out.append(q)
        num, den = den, r
    if den == 1:
        out.append(num)
    return out, iterations


def cf_decode_u64(seq: tp.Sequence[int]) -> Decoded:
    assert len(seq) > 0, 'cannot decode an empty continued fraction'
    i = len(seq) - 1
    num, den = seq[i], 1
    while i > 0:
        i -= 1
        num, den = den + seq[i] * num, num
    return num, den, len(seq) - 1


def nat_encode_u64(num: int, den: int) -> Encoded:
    _check_u64(num, den)
    out = []
    sign = 1
    iterations = 0
    while True:
        iterations += 1
        ip, fp = divmod(num, den)
        out.append(sign * (ip + (fp > 0)))
        if 2 * fp >= den:
            den = den - fp
            num = fp - den
        elif fp == 0:
            return out, iterations
        else:
            old = den
            den = fp
            num = old - 2 * fp
            sign = -sign


def nat_decode_u64(seq: tp.Sequence[int]) -> Decoded:
    assert len(seq) > 0, 'cannot decode an empty natural representation'
    i = len(seq) - 1
    previous_sign = seq[i] >= 0
    num, den = abs(seq[i]), 1
    while i > 0:
        i -= 1
        old = num
        newden = num + 2 * den
        num = abs(seq[i]) * newden - den
        if (seq[i] < 0) == previous_sign:
            num -= old
            previous_sign = not previous_sign
        den = newden
    return num, den, len(seq) - 1


class FastCodec:
    """A codec under benchmark: `encode(num, den)` and `decode(seq)` with loop counts."""

    name = "base"

    def encode(self, num: int, den: int) -> Encoded:
        raise NotImplementedError

    def decode(self, seq: tp.Sequence[int]) -> Decoded:
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}()"


class StandardU64(FastCodec):
    name = "standard_u64"

    def encode(self, num, den):
        return cf_encode_u64(num, den)

    def decode(self, seq):
        return cf_decode_u64(seq)


class NaturalU64(FastCodec):
    name = "natural_u64"

    def encode(self, num, den):
        return nat_encode_u64(num, den)

    def decode(self, seq):
        return nat_decode_u64(seq)


class ReferenceCodec(FastCodec):
    """The recursive arbitrary-precision codec; its loop count is the recursion depth."""

    name = "reference"

    def encode(self, num, den):
        if den == 0:
            raise PoleError(f"{num}/0 has no representation")
        seq = reference_encode(Fraction(num, den))
        return seq, len(seq)

    def decode(self, seq):
        value = reference_decode(seq)
        return value.numerator, value.denominator, len(seq) - 1
