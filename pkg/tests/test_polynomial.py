from __future__ import annotations

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from signless.polynomial import ONE, X, IntPolynomial, add, multiply, power, subtract

x = sp.symbols("x")
coeff_lists = st.lists(st.integers(-50, 50), max_size=7)


def to_sympy(p: IntPolynomial):
    return sum(c * x ** k for k, c in enumerate(p.coeffs))


def from_sympy(e) -> IntPolynomial:
    return IntPolynomial.from_descending([int(c) for c in sp.Poly(e, x).all_coeffs()])


def test_examples():
    assert (X - 1) * (X - 1) == IntPolynomial.from_descending([1, -2, 1])
    assert (X * X - 3 * X + 1) ** 0 == ONE
    assert (X * X - 3 * X + 1) * (X - 1) == IntPolynomial.from_descending([1, -4, 4, -1])


def test_zero_and_degree():
    z = IntPolynomial([0, 0])
    assert z.is_zero() and z.degree == -1 and str(z) == "0"
    assert IntPolynomial([3, 0, 2, 0]).degree == 2


def test_negative_power_rejected():
    with pytest.raises(ValueError):
        power(X, -1)


def test_str():
    assert str(IntPolynomial.from_descending([1, -6, 9, -4])) == "x^3 - 6x^2 + 9x - 4"
    assert str(-X) == "-x"


def test_json_round_trip_big():
    p = IntPolynomial([2 ** 80, -(3 ** 60), 7])
    data = p.to_json()
    assert all(isinstance(c, str) for c in data)
    assert IntPolynomial.from_json(data) == p


def test_immutable():
    with pytest.raises(AttributeError):
        X.coeffs = (1,)


@given(coeff_lists, coeff_lists)
def test_arith_matches_sympy(a, b):
    p, q = IntPolynomial(a), IntPolynomial(b)
    assert add(p, q) == from_sympy(sp.expand(to_sympy(p) + to_sympy(q)))
    assert subtract(p, q) == from_sympy(sp.expand(to_sympy(p) - to_sympy(q)))
    assert multiply(p, q) == from_sympy(sp.expand(to_sympy(p) * to_sympy(q)))


@given(coeff_lists, st.integers(0, 5))
def test_power_matches_sympy(a, k):
    p = IntPolynomial(a)
    assert power(p, k) == from_sympy(sp.expand(to_sympy(p) ** k))


@given(coeff_lists, coeff_lists, st.integers(-5, 5))
def test_evaluation_is_a_ring_map(a, b, t):
    p, q = IntPolynomial(a), IntPolynomial(b)
    assert (p * q)(t) == p(t) * q(t)
    assert (p + q)(t) == p(t) + q(t)


@given(coeff_lists, coeff_lists)
def test_degree_of_product(a, b):
    p, q = IntPolynomial(a), IntPolynomial(b)
    if p.is_zero() or q.is_zero():
        assert (p * q).is_zero()
    else:
        assert (p * q).degree == p.degree + q.degree
