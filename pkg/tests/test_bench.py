# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

import json
from fractions import Fraction

import pytest

from natrep.bench import (COLUMNS, NaturalU64, ReferenceCodec, StandardU64, build_metadata, cf_decode_u64,
                          cf_encode_u64, emit, fib, nat_decode_u64, nat_encode_u64, run_suite)
from natrep.codec import cf_encode, encode
from natrep.errors import PoleError, RangeError


def test_fib():
    assert [fib(n) for n in range(1, 11)] == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert fib(92) == 7540113804746346429
    for n in (0, 93):
        with pytest.raises(RangeError):
            fib(n)


def test_fast_paths_match_exact_codecs():
    for n in range(5, 92):
        num, den = fib(n), fib(n + 1)
        nat, _ = nat_encode_u64(num, den)
        cf, _ = cf_encode_u64(num, den)
        assert nat == encode(Fraction(num, den))
        assert cf == cf_encode(Fraction(num, den))
        assert nat_decode_u64(nat)[:2] == (num, den)
        assert cf_decode_u64(cf)[:2] == (num, den)


@pytest.mark.parametrize("num, den", [(0, 1), (7, 1), (2, 5), (3, 5), (22, 7), (1, 1000), (999, 1000)])
def test_fast_paths_small(num, den):
    q = Fraction(num, den)
    seq, _ = nat_encode_u64(num, den)
    assert seq == encode(q)
    assert Fraction(*nat_decode_u64(seq)[:2]) == q
    seq, _ = cf_encode_u64(num, den)
    assert Fraction(*cf_decode_u64(seq)[:2]) == q


def test_iteration_counts():
    seq, iterations = nat_encode_u64(5, 8)
    assert seq == [1, 1, 1] and iterations == 3
    assert nat_decode_u64(seq) == (5, 8, 2)
    seq, iterations = cf_encode_u64(5, 8)
    assert seq == [0, 1, 1, 1, 2] and iterations == 4
    assert cf_decode_u64(seq) == (5, 8, 4)


def test_u64_limits():
    with pytest.raises(PoleError):
        nat_encode_u64(1, 0)
    with pytest.raises(RangeError):
        cf_encode_u64(1 << 64, 3)
    with pytest.raises(RangeError):
        nat_encode_u64(-1, 3)


def test_codec_classes():
    assert NaturalU64().encode(5, 8) == ([1, 1, 1], 3)
    assert StandardU64().decode([0, 1, 1, 1, 2]) == (5, 8, 4)
    seq, depth = ReferenceCodec().encode(2, 5)
    assert seq == encode(Fraction(2, 5)) and depth == len(seq)
    assert ReferenceCodec().decode(seq)[:2] == (2, 5)
    with pytest.raises(PoleError):
        ReferenceCodec().encode(1, 0)


def quick(ns, **kwargs):
    return run_suite(ns, iterations=1, warmup=0, repeats=1, **kwargs)


def test_run_suite_columns():
    row, = quick([11])
    assert (row.n, row.num, row.den) == (11, 89, 144)
    assert (row.nat_len, row.nat_iters) == (6, 11)
    assert (row.cf_len, row.cf_iters) == (11, 20)
    assert min(row.cf_enc_us, row.cf_dec_us, row.nat_enc_us, row.nat_dec_us) > 0
    assert row.ref_enc_us is None


def test_natural_needs_fewer_iterations():
    for row in quick(range(5, 81, 5)):
        if row.n % 2:
            assert row.nat_len == (row.n + 1) // 2
        else:
            assert row.nat_len == row.n // 2 + 1
        assert row.cf_len == row.n
        assert row.cf_iters == 2 * row.n - 2
        assert row.nat_iters == 2 * row.nat_len - 1
        if row.n >= 30:
            assert row.nat_iters < row.cf_iters


def test_run_suite_reference():
    row, = quick([20], reference=True)
    assert row.ref_enc_us > 0 and row.ref_dec_us > 0


def test_run_suite_errors():
    with pytest.raises(RangeError):
        run_suite([10], iterations=0)
    with pytest.raises(RangeError):
        quick([92])


def test_emit_csv():
    assert emit([]) == ",".join(COLUMNS) + "\n"
    text = emit(quick([5, 10]))
    lines = text.splitlines()
    assert lines[0] == ",".join(COLUMNS)
    assert len(lines) == 3
    assert lines[1].startswith("5,5,8,")
    assert lines[1].endswith(",5,3,8,5")


def test_emit_reference_columns():
    header = emit(quick([5], reference=True)).splitlines()[0]
    assert header.endswith(",ref_enc_us,ref_dec_us")


def test_emit_json():
    doc = json.loads(emit(quick([10]), "json"))
    assert list(doc) == ["rows"]
    row, = doc["rows"]
    assert list(row) == list(COLUMNS)
    assert (row["num"], row["den"], row["nat_len"], row["cf_len"]) == (55, 89, 6, 10)


def test_emit_meta():
    meta = build_metadata()
    assert set(meta) == {"python", "implementation", "platform"}
    text = emit(quick([5]), meta=meta)
    assert text.startswith(f"# python: {meta['python']}\n")
    doc = json.loads(emit(quick([5]), "json", meta=meta))
    assert doc["meta"] == meta
    with pytest.raises(NotImplementedError):
        emit([], "xml")


@pytest.mark.benchmark(group="fib80")
@pytest.mark.parametrize("codec", [NaturalU64(), StandardU64()], ids=lambda c: c.name)
def test_benchmark_encode(benchmark, codec):
    num, den = fib(80), fib(81)
    seq, _ = benchmark.pedantic(codec.encode, args=(num, den), rounds=200, iterations=10)
    assert codec.decode(seq)[:2] == (num, den)


@pytest.mark.slow
def test_natural_encode_beats_continued_fraction():
    row, = run_suite([80], iterations=20000, warmup=3, repeats=7)
    assert row.cf_enc_us / row.nat_enc_us >= 1.2, (row.cf_enc_us, row.nat_enc_us)
