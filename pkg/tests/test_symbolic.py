from fractions import Fraction

import pytest
import sympy

from superkit.algebra import grassmann
from superkit.fields import PrimeField, Rationals
from superkit.symbolic import Reducer, eval_at, from_sympy, parse_expr, to_sympy

Q = Rationals()
F5 = PrimeField(5)


def test_scalar_conversion_roundtrip():
    assert to_sympy(Fraction(3, 4)) == sympy.Rational(3, 4)
    assert from_sympy(sympy.Rational(-2, 7), Q) == Fraction(-2, 7)
    assert from_sympy(sympy.Integer(7), F5).v == 2


def test_parse_expr_rejects_unknown_symbols():
    a = sympy.Symbol("a")
    assert parse_expr("a**2 - 1", {"a": a}) == a ** 2 - 1
    with pytest.raises(ValueError):
        parse_expr("a*b", {"a": a})


def test_reducer_inverse_relation():
    a, ai = sympy.symbols("a a_i")
    red = Reducer([a * ai - 1], Q)
    assert red.is_zero(a * ai - 1)
    assert red.is_zero(a ** 2 * ai ** 2 - 1)
    assert not red.is_zero(a * ai)


def test_reducer_mod_p():
    x = sympy.Symbol("x")
    red = Reducer([], F5)
    assert red.is_zero(5 * x)
    assert not red.is_zero(3 * x)


def test_eval_at_even_elements():
    R = grassmann(Q, ["a", "b"])
    x = sympy.Symbol("x")
    val = R.unit + R.element({"a*b": 1})
    out = eval_at(x ** 2 - 1, {x: val}, R)
    # (1 + ab)^2 - 1 = 2ab
    assert out == R.element({"a*b": 2})
