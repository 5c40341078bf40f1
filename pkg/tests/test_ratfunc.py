from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from heckejones.ratfunc import (
    LaurentPolynomial,
    PoleError,
    RationalFunction,
    VariableMismatchError,
    evaluate_at,
    rf_arith,
    substitute_power,
)

q = sympy.Symbol("q")

coeffs = st.lists(st.integers(-5, 5), min_size=1, max_size=4)


@st.composite
def rfs(draw):
    num = draw(coeffs)
    den = draw(coeffs.filter(lambda c: any(c)))
    val = draw(st.integers(-3, 3))
    return RationalFunction.from_coeffs("q", num, den, val)


def to_sympy(x: RationalFunction):
    return sympy.sympify(str(x).replace("^", "**"), locals={"q": q})


def same(x: RationalFunction, expr) -> bool:
    return sympy.simplify(to_sympy(x) - expr) == 0


@settings(max_examples=60, deadline=None)
@given(rfs(), rfs())
def test_arithmetic_matches_sympy(a, b):
    sa, sb = to_sympy(a), to_sympy(b)
    assert same(a + b, sa + sb)
    assert same(a - b, sa - sb)
    assert same(a * b, sa * sb)
    if not b.is_zero():
        assert same(a / b, sa / sb)


@settings(max_examples=60, deadline=None)
@given(rfs(), rfs(), rfs())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if not a.is_zero():
        assert a * a.inverse() == RationalFunction.one("q")


@settings(max_examples=40, deadline=None)
@given(rfs())
def test_canonical_form(a):
    # equal values have equal representations and hashes
    b = (a * RationalFunction.parse("q + 2")) / RationalFunction.parse("q + 2")
    assert a == b and hash(a) == hash(b)
    assert RationalFunction.parse(str(a), "q") == a


def test_parse_and_format():
    x = RationalFunction.parse("(q^2 - 1)/(q - 1)")
    assert x == RationalFunction.parse("q + 1")
    assert x.is_laurent()
    assert str(RationalFunction.parse("3/2*q^2")) == "3/2*q^2"
    assert RationalFunction.parse("q^-2") == RationalFunction.monomial("q", -2)


def test_evaluation_and_poles():
    x = RationalFunction.parse("1/(q - 1)")
    assert x.evaluate_at(3) == Fraction(1, 2)
    with pytest.raises(PoleError):
        x.evaluate_at(1)
    with pytest.raises(PoleError):
        RationalFunction.monomial("q", -1).evaluate_at(0)
    assert evaluate_at(RationalFunction.parse("q^2 + q^-1"), Fraction(1, 2)) == Fraction(9, 4)


def test_substitute_power():
    x = RationalFunction.parse("(q - 1)/(q + 1)")
    y = substitute_power(x, 3, "t")
    assert y == RationalFunction.parse("(t^3 - 1)/(t^3 + 1)", "t")


def test_variable_mismatch():
    with pytest.raises(VariableMismatchError):
        RationalFunction.monomial("q") + RationalFunction.monomial("t")


def test_rf_arith_dispatch():
    a, b = RationalFunction.parse("q"), RationalFunction.parse("q + 1")
    assert rf_arith(a, b, "add") == RationalFunction.parse("2*q + 1")
    assert rf_arith(a, b, "div") == RationalFunction.parse("q/(q + 1)")


def test_laurent_polynomial():
    p = LaurentPolynomial.from_terms("t", {-1: 2, 3: 1})
    assert p.min_exponent == -1 and p.max_exponent == 3
    assert (p * p).terms == {-2: 4, 2: 4, 6: 1}
    assert p.evaluate(-1) == -3
