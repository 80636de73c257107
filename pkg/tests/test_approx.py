# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

import math
from fractions import Fraction

import pytest

from natrep.approx import Surd, cf_digits, compare_codecs, convergent_error, convergents, digits, nat_digits, parse_surd
from natrep.codec import is_valid
from natrep.errors import DomainError, ParseError, PoleError

SQRT3 = Surd.sqrt(3)
SQRT2 = Surd.sqrt(2)
PHI = Surd.golden()


def test_nat_digits():
    assert nat_digits(SQRT3, 10) == [2] * 10
    assert nat_digits(PHI, 6) == [2, 1, 1, 1, 1, 1]
    assert nat_digits(SQRT2, 6) == [2, -1, 1, -1, 1, -1]
    for x in (SQRT2, SQRT3, PHI, Surd.sqrt(7), Surd(-1, 1, 3, 11)):
        ds = nat_digits(x, 12)
        assert all(is_valid(ds[:i]) for i in range(1, 13))


def test_cf_digits():
    assert cf_digits(SQRT3, 5) == [1, 1, 2, 1, 2]
    assert cf_digits(SQRT2, 4) == [1, 2, 2, 2]
    assert cf_digits(PHI, 5) == [1, 1, 1, 1, 1]
    assert digits(SQRT3, 3, "standard") == [1, 1, 2]


def test_convergents():
    assert convergents(SQRT3, 3) == [2, Fraction(7, 4), Fraction(26, 15)]
    assert convergents(PHI, 3) == [2, Fraction(5, 3), Fraction(13, 8)]
    assert convergents(SQRT2, 3) == [2, Fraction(4, 3), Fraction(10, 7)]


def test_natural_terms_worth_two_standard_terms():
    natural = convergents(SQRT3, 10, "natural")
    standard = convergents(SQRT3, 20, "standard")
    for k in range(1, 11):
        assert natural[k - 1] == standard[2 * k - 1]
    rows = compare_codecs(SQRT3, 10)
    assert [r.k for r in rows] == list(range(1, 11))
    assert all(r.natural == r.standard and r.natural_not_worse for r in rows)


@pytest.mark.parametrize("x", [SQRT3, PHI, SQRT2], ids=["sqrt3", "phi", "sqrt2"])
def test_errors_shrink(x):
    errors = [convergent_error(x, nat_digits(x, k))[1] for k in range(1, 31)]
    assert all(a > b for a, b in zip(errors, errors[1:]))
    assert errors[-1] > 0


def test_convergent_error():
    value, error = convergent_error(SQRT3, [2, 2])
    assert value == Fraction(7, 4)
    assert error == Fraction(7, 4) - SQRT3
    assert error.sign() == 1
    value, error = convergent_error(SQRT3, [1, 1, 2], "standard")
    assert value == Fraction(5, 3)
    assert error == SQRT3 - Fraction(5, 3)


def test_surd_arithmetic():
    assert SQRT2 * SQRT2 == 2
    assert (SQRT2 * SQRT2).is_rational
    assert SQRT2.reciprocal() == SQRT2 / 2
    assert 1 / SQRT2 == Surd(0, 1, 2, 2)
    assert PHI * PHI == PHI + 1
    assert PHI - 1 == PHI.reciprocal()
    assert -SQRT3 + SQRT3 == 0
    assert Surd.sqrt(8) == 2 * SQRT2
    assert Surd.sqrt(4) == 2
    assert Surd.from_ratio(Fraction(3, 4)).as_fraction() == Fraction(3, 4)


def test_surd_order():
    assert Fraction(7, 5) < SQRT2 < Fraction(3, 2)
    assert -SQRT2 < -1
    assert SQRT2 < SQRT2 + Fraction(1, 10 ** 12)
    assert abs(-SQRT3) == SQRT3
    assert math.floor(-SQRT2) == -2
    assert math.floor(PHI) == 1
    assert math.ceil(SQRT2) == 2
    assert math.floor(Surd(5, -3, 1, 2)) == 0
    assert float(SQRT2) == pytest.approx(1.4142135623730951)


def test_surd_text():
    assert str(SQRT3) == "√3"
    assert str(PHI) == "(1 + √5)/2"
    assert str(Surd.sqrt(8)) == "2√2"
    assert str(-SQRT2) == "-√2"
    assert str(Surd(1, -1, 1, 2)) == "1 - √2"
    assert str(Surd.from_ratio(Fraction(-3, 2))) == "-3/2"


def test_parse_surd():
    assert parse_surd("sqrt(3)") == SQRT3
    assert parse_surd(" sqrt( 12 ) ") == 2 * SQRT3
    assert parse_surd("phi") == PHI
    assert parse_surd("Golden") == PHI
    assert parse_surd("3/4") == Fraction(3, 4)
    for text in ["sqrt(-2)", "pi", "1/0", ""]:
        with pytest.raises(ParseError):
            parse_surd(text)


def test_surd_errors():
    with pytest.raises(PoleError):
        Surd(1, 0, 0)
    with pytest.raises(DomainError):
        Surd(0, 1, 1, -3)
    with pytest.raises(DomainError):
        SQRT2 + SQRT3
    with pytest.raises(PoleError):
        Surd.from_ratio(0).reciprocal()
    with pytest.raises(DomainError):
        nat_digits(Surd.from_ratio(Fraction(2, 5)), 3)
    with pytest.raises(DomainError):
        cf_digits(Surd.sqrt(9), 3)
    with pytest.raises(NotImplementedError):
        digits(SQRT2, 3, "binary")


def test_rational_surds_hash_like_fractions():
    assert hash(SQRT2 * SQRT2) == hash(2)
    three_quarters = Surd.from_ratio(Fraction(3, 4))
    assert hash(three_quarters) == hash(Fraction(3, 4))
    assert len({three_quarters, Fraction(3, 4)}) == 1
    assert {Fraction(3, 4): "x"}[three_quarters] == "x"
