from fractions import Fraction

import pytest

from superkit.fields import FieldError, FpElement, PrimeField, Rationals, parse_field


def test_parse_field_variants():
    assert isinstance(parse_field("q"), Rationals)
    F = parse_field("p=5")
    assert isinstance(F, PrimeField) and F.p == 5


def test_characteristic_two_rejected():
    with pytest.raises(FieldError):
        parse_field("p=2")
    with pytest.raises(FieldError):
        PrimeField(2)


def test_non_prime_rejected():
    with pytest.raises(FieldError):
        PrimeField(9)


def test_rational_parse_render():
    K = Rationals()
    x = K.parse("-3/7")
    assert x == Fraction(-3, 7)
    assert K.render(x) == "-3/7"
    assert K.render(K.from_int(4)) == "4"


def test_fp_arithmetic():
    F = PrimeField(7)
    a = F.from_int(3)
    b = F.from_int(5)
    assert (a + b).v == 1
    assert (a * b).v == 1
    assert (a - b).v == 5
    assert (a / b).v == (3 * pow(5, -1, 7)) % 7
    assert (-a).v == 4
    assert F.from_fraction(Fraction(1, 2)).v == pow(2, -1, 7)


def test_fp_parse_render():
    F = PrimeField(5)
    assert F.parse("7") == F.from_int(2)
    assert F.parse("1/2") == F.from_int(3)
    assert F.render(F.from_int(3)) == "3"


def test_fp_mixed_with_int():
    F = PrimeField(5)
    a = F.from_int(2)
    assert a + 4 == F.from_int(1)
    assert 3 * a == F.from_int(1)
