# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

"""Encode and decode timings for ratios of consecutive Fibonacci numbers."""

import io
import json
import logging
import platform
import sys
import time
import typing as tp
from dataclasses import asdict, dataclass

from tqdm import tqdm

from ..errors import RangeError
from .fastpath import FastCodec, NaturalU64, ReferenceCodec, StandardU64

logger = logging.getLogger(__name__)

FIB_MAX_INDEX = 92

DEFAULT_FIB = (5, 10, 20, 30, 40, 50, 60, 70, 80)
DEFAULT_ITERATIONS = 10_000_000

COLUMNS = ("n", "num", "den", "cf_enc_us", "cf_dec_us", "nat_enc_us", "nat_dec_us",
           "cf_len", "nat_len", "cf_iters", "nat_iters")
REFERENCE_COLUMNS = ("ref_enc_us", "ref_dec_us")

FORMATS = ("csv", "json")


def fib(n: int) -> int:
    """f_1 = f_2 = 1; the largest index that fits in 64 bits is 92."""
    if not 1 <= n <= FIB_MAX_INDEX:
        raise RangeError(f"fib index must be in 1..{FIB_MAX_INDEX}, got {n}")
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


@dataclass
class BenchRow:
    n: int
    num: int
    den: int
    cf_enc_us: float
    cf_dec_us: float
    nat_enc_us: float
    nat_dec_us: float
    cf_len: int
    nat_len: int
    cf_iters: int
    nat_iters: int
    ref_enc_us: tp.Optional[float] = None
    ref_dec_us: tp.Optional[float] = None


def _time_us(fn: tp.Callable, args: tuple, iterations: int, warmup: int, repeats: int) -> float:
    """Best of `repeats` timed loops of `iterations` calls, in microseconds."""
    sink = None
    for _ in range(warmup):
        for _ in range(min(iterations, 1000)):
            sink = fn(*args)
    best = None
    for _ in range(repeats):
        start = time.perf_counter_ns()
        for _ in range(iterations):
            sink = fn(*args)
        elapsed = time.perf_counter_ns() - start
        best = elapsed if best is None else min(best, elapsed)
    assert sink is not None
    return max(best, 1) / 1000.0


def _time_codec(codec: FastCodec, num: int, den: int, iterations: int, warmup: int, repeats: int):
    seq, enc_iters = codec.encode(num, den)
    _, _, dec_iters = codec.decode(seq)
    enc_us = _time_us(codec.encode, (num, den), iterations, warmup, repeats)
    dec_us = _time_us(codec.decode, (seq,), iterations, warmup, repeats)
    return seq, enc_iters + dec_iters, enc_us, dec_us


def run_suite(ns: tp.Iterable[int] = DEFAULT_FIB,
              iterations: int = DEFAULT_ITERATIONS,
              warmup: int = 3,
              repeats: int = 3,
              natural: tp.Optional[FastCodec] = None,
              standard: tp.Optional[FastCodec] = None,
              reference: bool = False,
              verbose: bool = False) -> tp.List[BenchRow]:
    """Time both codecs on f_n/f_(n+1) for every n, one ratio at a time.

    The iteration columns count main-loop passes of one encode plus one decode
    and do not depend on the machine.
    """
    if iterations < 1:
        raise RangeError(f"iterations must be at least 1, got {iterations}")
    assert repeats >= 1, 'repeats must be at least 1'
    natural = natural if natural is not None else NaturalU64()
    standard = standard if standard is not None else StandardU64()
    ns = list(ns)
    for n in ns:
        fib(n + 1)

    rows = []
    for n in tqdm(ns, desc="bench", file=sys.stderr, disable=not verbose):
        num, den = fib(n), fib(n + 1)
        cf_seq, cf_iters, cf_enc, cf_dec = _time_codec(standard, num, den, iterations, warmup, repeats)
        nat_seq, nat_iters, nat_enc, nat_dec = _time_codec(natural, num, den, iterations, warmup, repeats)
        row = BenchRow(n, num, den, cf_enc, cf_dec, nat_enc, nat_dec,
                       len(cf_seq), len(nat_seq), cf_iters, nat_iters)
        if reference:
            _, _, row.ref_enc_us, row.ref_dec_us = _time_codec(ReferenceCodec(), num, den, iterations, warmup, repeats)
        logger.info("n=%d cf_len=%d nat_len=%d cf_iters=%d nat_iters=%d", n, row.cf_len, row.nat_len,
                    cf_iters, nat_iters)
        rows.append(row)
    return rows


def build_metadata() -> tp.Dict[str, str]:
    return {
        "python": platform.python_version(),
        "implementation": platform.python_implementation(),
        "platform": platform.platform(),
    }


def emit(rows: tp.Sequence[BenchRow], format: str = "csv", meta: tp.Optional[tp.Dict[str, str]] = None) -> str:
    """Rows as CSV (header always present) or JSON, columns in a fixed order."""
    from pandas import DataFrame

    if format not in FORMATS:
        raise NotImplementedError(f'Unknown bench format: {format}')

    columns = list(COLUMNS)
    if any(r.ref_enc_us is not None for r in rows):
        columns += list(REFERENCE_COLUMNS)
    frame = DataFrame([asdict(r) for r in rows], columns=columns)

    if format == "json":
        doc = {"rows": json.loads(frame.to_json(orient="records"))}
        if meta:
            doc = {"meta": meta, **doc}
        return json.dumps(doc, indent=2) + "\n"

    out = io.StringIO()
    if meta:
        for k, v in meta.items():
            out.write(f"# {k}: {v}\n")
    frame.to_csv(out, index=False, lineterminator="\n")
    return out.getvalue()
