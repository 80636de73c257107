# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

from fractions import Fraction

import pytest

from natrep.codec import encode
from natrep.words import (EMPTY, ONE, TWO_V, Pair, as_natrep, division_report, division_word, format_word, int_word,
                          parse_normal_form, parse_word, read_word, segment_value, strip_spent, valuate)


@pytest.mark.parametrize("text, value", [
    ("", Fraction(0)),
    ("111", Fraction(3)),
    ("111D", Fraction(-3)),
    ("D11", Fraction(2)),
    ("V", Fraction(1, 2)),
    ("VV", Fraction(2, 5)),
    ("1V", Fraction(1, 3)),
    ("DVD1", Fraction(1, 2)),
    ("1DVD1", Fraction(1, 3)),
    ("1VD11", Fraction(5, 3)),
])
def test_segment_value(text, value):
    assert segment_value(parse_word(text)) == value


def test_leading_diamond_is_invisible():
    for text in ["1", "V1", "1DV11", "VV"]:
        w = parse_word(text)
        assert segment_value(parse_word("D" + text)) == segment_value(w)


def test_read_pairs():
    assert read_word(parse_word("(,111)111111")) == 9
    assert read_word(parse_word("(1111,111)")) == 3
    assert read_word(parse_word("11(,V)")) == Fraction(3, 2)
    assert read_word(parse_word("V(1,)")) is None


def test_segment_value_rejects_pairs():
    with pytest.raises(AssertionError):
        segment_value((Pair(EMPTY, EMPTY),))


def test_valuate():
    assert valuate((TWO_V, TWO_V)) == Fraction(2, 5)
    assert valuate(int_word(-3)) == -3
    assert valuate(parse_word("1DVD1")) == Fraction(1, 3)
    assert valuate(parse_word("(1VD,)1VD1")) == Fraction(2, 3)
    assert valuate(parse_word("(1VD,)(VD,)11D")) == -2
    assert read_word((ONE, ONE, Pair(EMPTY, (ONE, ONE, ONE)))) == 9
    assert valuate((ONE, ONE, Pair(EMPTY, (ONE, ONE, ONE)))) is None
    assert valuate(parse_word("D1VD1")) is None


def test_as_natrep():
    assert as_natrep(parse_word("VV")) == [1, -1, 0]
    assert as_natrep(parse_word("V(1,)")) is None


def test_parse_normal_form():
    assert parse_normal_form(EMPTY) == 0
    assert parse_normal_form(parse_word("111")) == 3
    assert parse_normal_form(parse_word("1VD1")) == Fraction(2, 3)
    assert parse_normal_form(parse_word("(1,)111")) == 3
    assert parse_normal_form(parse_word("(,1)111")) is None
    assert strip_spent(parse_word("(1,)(V,)1(1,)")) == parse_word("1(1,)")


@pytest.mark.parametrize("n, m, normal", [
    (0, 0, "(VD,)1"),
    (1, 0, "(VD,)V1"),
    (0, 1, "(1VD,)1VD1"),
])
def test_division_report(n, m, normal):
    report = division_report(n, m)
    assert format_word(report.normal_form) == normal
    assert report.before == report.after == report.expected == Fraction(2 + n, 2 + m)
    assert report.preserved


def test_division_keeps_value():
    for n in range(7):
        for m in range(7):
            q = Fraction(2 + n, 2 + m)
            assert valuate(division_word(n, m)) == q, (n, m)
            assert division_report(n, m).preserved
            assert as_natrep(division_word(n, m)) == encode(q)
