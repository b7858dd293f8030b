from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bruhat_tits.errors import ValidationError
from bruhat_tits.rationals import (
    RationalParseError,
    format_rational,
    format_vector,
    lcm_of_denominators,
    parse_rational,
    parse_vector,
    solve,
)


@pytest.mark.parametrize("text, value", [
    ("0", Fraction(0)),
    ("1/2", Fraction(1, 2)),
    ("-3/6", Fraction(-1, 2)),
    (" 7 ", Fraction(7)),
    ("+4/2", Fraction(2)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "1/0", "0.5", "1e3", "a/b", "1//2", "1/-2"])
def test_parse_rational_rejects(text):
    with pytest.raises(RationalParseError) as info:
        parse_rational(text)
    assert info.value.code == "bad_rational"


def test_rejects_floats():
    with pytest.raises(RationalParseError):
        parse_rational(0.5)


def test_vectors():
    assert parse_vector("1/2, 0,-1/3") == (Fraction(1, 2), 0, Fraction(-1, 3))
    assert parse_vector("") == ()
    assert format_vector((Fraction(1, 2), Fraction(4, 2), Fraction(-2, 6))) == "1/2,2,-1/3"


@given(st.fractions())
def test_format_parse_round_trip(x):
    assert parse_rational(format_rational(x)) == x


def test_lcm_of_denominators():
    assert lcm_of_denominators([Fraction(1, 4), Fraction(1, 6), 3]) == 12
    assert lcm_of_denominators([]) == 1


def test_solve():
    assert solve([[2, -1], [-1, 2]], [1, 0]) == (Fraction(2, 3), Fraction(1, 3))
    with pytest.raises(ValidationError):
        solve([[1, 2], [2, 4]], [1, 1])
