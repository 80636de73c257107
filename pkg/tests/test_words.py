# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

import pytest

from natrep.errors import ParseError
from natrep.sets import diamond, kuratowski, singleton, substitute, two_v, zermelo
from natrep.words import (DIAMOND, EMPTY, ONE, TWO_V, Pair, close, concat, division_word, expr_add_int,
                          expr_sub_int, format_word, has_pair, int_word, integer_part_word, integer_value,
                          is_integer_word, is_natural_word, lower, mul_start, multiplication_word, natural_word,
                          parse_word, rational_open_word)


def test_parse_word():
    assert parse_word("DVD1") == (DIAMOND, TWO_V, DIAMOND, ONE)
    assert parse_word(" 1 1 ( , 111 ) ") == (ONE, ONE, Pair(EMPTY, (ONE, ONE, ONE)))
    assert parse_word("") == EMPTY
    assert parse_word("((1,D),V)") == (Pair((Pair((ONE,), (DIAMOND,)),), (TWO_V,)),)


@pytest.mark.parametrize("text", ["X", "(1,D", "1)", "(1D)"])
def test_parse_word_errors(text):
    with pytest.raises(ParseError):
        parse_word(text)


@pytest.mark.parametrize("text", ["DVD1", "11(,111)", "(1D,(V,))1", "1D"])
def test_format_word_inverts_parse(text):
    assert format_word(parse_word(text)) == text


def test_format_word_unicode():
    assert format_word(parse_word("DVD1"), unicode=True) == "◇2_V◇1"
    assert format_word(parse_word("(VD,)"), unicode=True) == "(2_V◇,)"


def test_builders():
    assert natural_word(3) == (ONE, ONE, ONE)
    assert int_word(2) == (DIAMOND, ONE, ONE)
    assert int_word(-2) == (ONE, ONE, DIAMOND)
    assert int_word(0) == (DIAMOND,)
    assert expr_add_int(int_word(1), int_word(2)) == parse_word("D11DD1")
    assert expr_sub_int(int_word(1), int_word(2)) == parse_word("DD11D1")
    assert mul_start(int_word(3)) == parse_word("(D,D111)")
    assert close(parse_word("11V")) == parse_word("(11V1,11V)")
    assert multiplication_word(3, -1) == parse_word("11(D,1D)")
    assert division_word(1, 2) == parse_word("111(11VD,)")
    assert integer_part_word(1) == parse_word("111(,1V)")
    assert rational_open_word([1, -1, 0]) == parse_word("DV1DVD1")


def test_classifiers():
    assert is_natural_word(EMPTY)
    assert is_natural_word(natural_word(4))
    assert not is_natural_word(int_word(0))
    assert is_integer_word(int_word(5)) and integer_value(int_word(5)) == 5
    assert is_integer_word(int_word(-5)) and integer_value(int_word(-5)) == -5
    assert integer_value(int_word(0)) == 0
    assert not is_integer_word(parse_word("1D1"))
    assert not is_integer_word(EMPTY)
    assert has_pair(mul_start(int_word(1)))
    assert not has_pair(int_word(1))


def test_concat():
    w = parse_word("1D(1,V)")
    assert concat(EMPTY, w) == w
    assert concat(w, EMPTY) == w
    assert concat(natural_word(2), natural_word(3)) == natural_word(5)


def test_lower():
    assert lower(EMPTY) is zermelo(0)
    assert lower(natural_word(2)) is zermelo(2)
    assert lower((DIAMOND,)) is diamond()
    assert lower((ONE, TWO_V)) is singleton(two_v())
    assert lower(concat((DIAMOND,), (ONE,))) is kuratowski(zermelo(2), zermelo(1))
    assert lower((Pair((ONE,), EMPTY),)) is diamond()


@pytest.mark.parametrize("a, b", [("1D", "V1"), ("(1,D)", "11"), ("V", "(D,V)D"), ("D1V", "")])
def test_lower_is_a_homomorphism(a, b):
    a, b = parse_word(a), parse_word(b)
    assert lower(concat(a, b)) is substitute(lower(a), lower(b))


def test_pair_followed_by_tail():
    left, right, tail = parse_word("1D"), parse_word("V"), parse_word("11")
    assert lower((Pair(left, right),) + tail) is kuratowski(lower(left + tail), lower(right + tail))
