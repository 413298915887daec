from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cacti.errors import DivisionByZero, MixedFields, ParseError
from cacti.scalar import GF, QQ, FieldSpec, arith, parse_scalar


def test_rational_sum():
    a, b = parse_scalar("1/3", QQ), parse_scalar("1/6", QQ)
    assert arith(a, b, "add") == parse_scalar("1/2", QQ)


def test_inverse_mod_seven():
    assert arith(parse_scalar("3", GF(7)), None, "inv") == parse_scalar("5", GF(7))


def test_neg_zero():
    assert str(arith(parse_scalar("0", QQ), None, "neg")) == "0"


def test_parse_examples():
    assert parse_scalar("-2/3", QQ).value == Fraction(-2, 3)
    assert parse_scalar("9", GF(7)).value == 2
    with pytest.raises(DivisionByZero):
        parse_scalar("1/7", GF(7))
    with pytest.raises(ParseError):
        parse_scalar("1.5", QQ)


def test_mixed_fields_rejected():
    with pytest.raises(MixedFields):
        parse_scalar("1", GF(5)) + parse_scalar("1", GF(7))


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        parse_scalar("1", QQ) / parse_scalar("0", QQ)


def test_field_text():
    assert FieldSpec.from_text("F7") == GF(7)
    assert FieldSpec.from_text("Q") == QQ
    with pytest.raises(Exception):
        GF(8)


fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)


@given(fractions, fractions, fractions)
def test_rational_field_axioms(a, b, c):
    x, y, z = (QQ(v) for v in (a, b, c))
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    if a != 0:
        assert x * x.inv() == QQ(1)


@given(st.integers(0, 10), st.integers(0, 10), st.integers(0, 10))
def test_prime_field_axioms(a, b, c):
    F = GF(11)
    x, y, z = F(a), F(b), F(c)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    if a % 11:
        assert x / x == F(1)


@given(fractions)
def test_parse_print_roundtrip(a):
    s = QQ(a)
    assert parse_scalar(str(s), QQ) == s
    assert str(parse_scalar(str(s), QQ)) == str(s)
