# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

import json
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from natrep.codec import decode
from natrep.errors import DomainError, InvalidSequence, PoleError
from natrep.tree import (ANCHORS, GROUP, check_symmetry, composition_table, d3_check, f, g, level, level_values,
                         negate, sigma_zero, symmetry_map)


@pytest.mark.parametrize("anchor, center_times_2, pairs, span, span_values", [
    (Fraction(-1, 2), 23, 11, (1, 22), ("-7/2", "5/2")),
    (Fraction(-1), 15, 7, (1, 14), ("-7/2", "-2/7")),
    (Fraction(1), 39, 4, (16, 23), ("1/4", "4")),
    (Fraction(0), 31, 8, (8, 23), ("-4/5", "4")),
    (Fraction(-2), 7, 3, (1, 6), ("-7/2", "-7/5")),
])
def test_level_five(anchor, center_times_2, pairs, span, span_values):
    report = check_symmetry(anchor, 5)
    assert report.center_times_2 == center_times_2
    assert len(report.pairs) == pairs
    assert report.span == span
    assert report.span_values == tuple(Fraction(v) for v in span_values)


def test_pairs_quoted_in_captions():
    values = {(a, b) for _, _, a, b in check_symmetry(Fraction(-1, 2), 5).pairs}
    assert (Fraction(-7, 2), Fraction(5, 2)) in values
    values = {(a, b) for _, _, a, b in check_symmetry(0, 5).pairs}
    assert (Fraction(-4, 5), Fraction(4)) in values


@pytest.mark.parametrize("h", range(3, 11))
def test_minus_one_half_spans_all_but_the_integers(h):
    report = check_symmetry(Fraction(-1, 2), h)
    n = len(level(h))
    assert report.center_times_2 == n - 1
    assert len(report.pairs) == n // 2 - 1
    assert report.span == (1, n - 2)


@pytest.mark.parametrize("h", range(3, 11))
@pytest.mark.parametrize("anchor", ANCHORS)
def test_reported_pairs_are_mirrored(anchor, h):
    report = check_symmetry(anchor, h)
    values = level_values(h)
    sigma = symmetry_map(anchor)
    for i, j, a, b in report.pairs:
        assert i < j and i + j == report.center_times_2
        assert (values[i], values[j]) == (a, b)
        assert sigma(a) == b
    if report.span is not None:
        lo, hi = report.span
        assert lo + hi == report.center_times_2
        assert (lo, hi) in [(i, j) for i, j, _, _ in report.pairs]


def test_report_json():
    doc = json.loads(check_symmetry(Fraction(-1), 5).to_json())
    assert doc["anchor"] == "-1"
    assert doc["height"] == 5
    assert doc["span"] == [1, 14]
    assert doc["span_values"] == ["-7/2", "-2/7"]
    assert doc["pairs"][0] == {"i": 7, "j": 8, "value_i": "-5/4", "value_j": "-4/5"}


def test_maps():
    assert f(Fraction(5, 2)) == Fraction(-7, 2)
    assert g(Fraction(-7, 2)) == Fraction(-2, 7)
    assert sigma_zero(Fraction(4)) == Fraction(-4, 5)
    assert symmetry_map(1) is g and symmetry_map(-1) is g
    assert symmetry_map(0) is sigma_zero and symmetry_map(-2) is sigma_zero
    assert symmetry_map(Fraction(-1, 2)) is f
    with pytest.raises(PoleError):
        g(Fraction(0))
    with pytest.raises(PoleError):
        sigma_zero(Fraction(-1))


def test_symmetry_errors():
    with pytest.raises(DomainError):
        symmetry_map(2)
    with pytest.raises(DomainError):
        check_symmetry(Fraction(1, 2), 5)
    with pytest.raises(DomainError):
        check_symmetry(0, 1)


def test_negate():
    assert negate([1, 1]) == [-1, -1]
    assert decode(negate([1, 1])) == Fraction(-5, 3)
    assert negate([0, 0]) == [0, 0]
    assert decode([-2, 0]) == Fraction(-5, 2)
    assert negate([3]) == [-3]
    with pytest.raises(InvalidSequence):
        negate([1, 0, 1])


@pytest.mark.parametrize("h", range(2, 9))
def test_negate_mirrors_levels(h):
    for s in level(h):
        if len(s) == 1:
            assert decode(negate(s)) == -decode(s)
        else:
            assert decode(negate(s)) == -1 - decode(s)


def test_composition_table():
    table = composition_table()
    names = set(GROUP)
    assert names == {"id", "f", "g", "fg", "gf", "fgf"}
    for a in names:
        assert set(table[a].values()) == names
        assert {table[b][a] for b in names} == names
        assert table["id"][a] == a and table[a]["id"] == a
    assert table["f"]["f"] == table["g"]["g"] == "id"
    assert table["f"]["g"] == "fg"
    assert table["fg"]["fg"] == "gf"
    assert table["fg"]["gf"] == "id"
    assert table["g"]["fg"] == "fgf"
    assert GROUP["fg"] == (1, 1, -1, 0)


def test_d3_sample():
    assert f(g(f(Fraction(4)))) == sigma_zero(Fraction(4)) == Fraction(-4, 5)
    assert f(f(Fraction(7, 3))) == Fraction(7, 3)
    x = Fraction(2, 5)
    for _ in range(3):
        x = f(g(x))
    assert x == Fraction(2, 5)


def test_d3_random_rationals():
    rng = random.Random(1234)
    samples = []
    while len(samples) < 1000:
        x = Fraction(rng.randint(-500, 500), rng.randint(1, 500))
        if x not in (0, -1):
            samples.append(x)
    report = d3_check(samples)
    assert report.samples == 1000
    assert report.ok
    assert report.table == composition_table()


@given(st.fractions())
def test_d3_laws(x):
    assume(x not in (0, -1))
    assert d3_check([x]).ok


def test_d3_poles():
    with pytest.raises(PoleError):
        d3_check([Fraction(0)])
    with pytest.raises(PoleError):
        d3_check([Fraction(1), Fraction(-1)])
