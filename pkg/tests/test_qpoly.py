from fractions import Fraction

from hypothesis import given, strategies as st
import pytest

from vactab.errors import InexactDivision
from vactab.qpoly import ONE, Q, ZERO, QPoly, q_binomial, q_factorial, q_int

polys = st.lists(st.integers(-20, 20), max_size=6).map(QPoly)


def test_q_int():
    assert q_int(3) == QPoly([1, 1, 1])
    assert q_int(0) == ZERO


def test_q_binomial():
    assert q_binomial(4, 2) == QPoly([1, 1, 2, 1, 1])
    assert all(q_binomial(n, 0) == ONE for n in range(6))


@pytest.mark.parametrize("a", range(8))
def test_q_binomial_pascal(a):
    for b in range(1, a):
        rhs = q_binomial(a - 1, b - 1) + QPoly.monomial(b) * q_binomial(a - 1, b)
        assert q_binomial(a, b) == rhs


def test_canonical_form():
    assert QPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert ZERO.coeffs == ()
    assert QPoly([0, 0]) == ZERO


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == ZERO


@given(polys, polys)
def test_exact_division_round_trip(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a


def test_inexact_division_raises():
    with pytest.raises(InexactDivision):
        q_int(3).exact_div(q_int(2))


@given(polys, st.fractions(max_denominator=7).filter(lambda x: abs(x) < 5))
def test_evaluation_is_a_homomorphism(a, x):
    assert (a * Q)(x) == a(x) * x
    assert (a + ONE)(x) == a(x) + 1


def test_factorial_at_one():
    assert q_factorial(5)(1) == 120
    assert q_factorial(3)(Fraction(1, 2)) == Fraction(1) * Fraction(3, 2) * Fraction(7, 4)


@given(polys)
def test_json_round_trip(a):
    assert QPoly.from_json(a.to_json()) == a
    assert all(isinstance(s, str) for s in a.to_json())
