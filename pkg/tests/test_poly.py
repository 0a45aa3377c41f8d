from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from logdiv.poly import (
    ExponentOverflowError,
    PolynomialSyntaxError,
    PolyRing,
    UnknownVariableError,
    evaluate,
    weighted_degree,
)

from .conftest import R3, polynomials

P = polynomials()


def test_parse_and_print():
    f = R3("(x+y)^2*z - 3/2*x")
    assert str(f) == "x^2*z + 2*x*y*z + y^2*z - 3/2*x"
    assert R3("x**2") == R3("x^2") == R3("x*x")
    assert str(R3("0")) == "0"


def test_parse_errors_carry_offsets():
    with pytest.raises(PolynomialSyntaxError):
        R3("x +")
    with pytest.raises(UnknownVariableError) as exc:
        R3("x + w")
    assert exc.value.offset == 4
    with pytest.raises(ExponentOverflowError):
        R3("x^100000000000")


def test_ring_validation():
    with pytest.raises(ValueError):
        PolyRing("x x")
    with pytest.raises(ValueError):
        PolyRing("x y", weights=[1, 0])
    with pytest.raises(ValueError):
        PolyRing("x y", order="nope")


def test_division_and_evaluation():
    f = R3("x^3 - y^3")
    q, r = f.divmod(R3("x - y"))
    assert r.is_zero() and q == R3("x^2 + x*y + y^2")
    assert evaluate(f, [2, 1, 0]) == 7
    assert f(Fraction(1, 2), 0, 5) == Fraction(1, 8)


def test_weighted_degree():
    R = PolyRing("x y z", weights=[3, 2, 1])
    assert weighted_degree(R("x^2 + y^3 + z^6")) == 6
    assert weighted_degree(R("x + y")) is None


@given(P, P, P)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == R3.zero()
    assert a * R3.one() == a


@given(P)
def test_print_parse_roundtrip(a):
    assert R3(str(a)) == a


@given(P, P, st.integers(0, 2))
def test_leibniz(a, b, i):
    assert (a * b).diff(i) == a.diff(i) * b + a * b.diff(i)


@given(P, P)
def test_divmod_identity(a, b):
    if b.is_zero():
        return
    q, r = a.divmod(b)
    assert q * b + r == a
