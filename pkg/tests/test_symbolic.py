from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nakayama.errors import ZeroDenominator
from nakayama.symbolic import (
    Atom,
    F_atom,
    Factored,
    Polynomial,
    RationalFunction,
    TropicalForm,
    f_polynomial,
    partial_derivative,
    rf_equal,
    rf_mul,
    trop_eval,
    trop_of_monomial_in_F,
    y_atom,
    y_range,
)

N = 3


def polys(nvars=N):
    term = st.tuples(st.tuples(*[st.integers(0, 2)] * nvars), st.integers(-4, 4))
    return st.lists(term, max_size=4).map(lambda ts: Polynomial(nvars, dict(ts)))


def y(k, n=2):
    return Polynomial.variable(n, k)


def test_f_polynomial_examples():
    assert f_polynomial(2, 1, 2) == 1 + y(1) + y(1) * y(2)
    assert f_polynomial(4, 3, 2) == 1
    assert f_polynomial(3, 0, 2) == 1
    assert f_polynomial(3, 2, 4) == 1
    y3 = lambda k: Polynomial.variable(3, k)  # noqa: E731
    assert f_polynomial(3, 2, 3) == 1 + y3(2) + y3(2) * y3(3)
    with pytest.raises(ValueError):
        f_polynomial(2, 1, 5)


def test_rendering_and_json():
    p = 1 + y(1) + y(1) * y(2)
    assert str(p) == "1 + y1 + y1*y2"
    q = Polynomial(2, {(0, 0): 1, (1, 0): 1, (1, 1): 1})
    assert q.to_json() == [[[0, 0], 1], [[1, 0], 1], [[1, 1], 1]]
    assert Polynomial.from_json(2, q.to_json()) == q
    assert str(Polynomial(2, {(0, 2): -3, (1, 0): 2})) == "-3*y2^2 + 2*y1"
    assert str(Polynomial(2)) == "0"


def test_product_example():
    assert f_polynomial(2, 1, 1) * f_polynomial(2, 2, 2) == 1 + y(1) + y(2) + y(1) * y(2)


@pytest.mark.parametrize("n", range(2, 9))
def test_f_identity(n):
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            lhs = f_polynomial(n, i, j - 1) * f_polynomial(n, i + 1, j)
            rhs = f_polynomial(n, i, j) * f_polynomial(n, i + 1, j - 1) + y_range(n, i + 1, j)
            assert lhs == rhs


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a - a == Polynomial(N)
    assert a ** 2 == a * a


@given(polys(), polys(), polys())
def test_rational_equality_by_cross_multiplication(p, q, r):
    if q.is_zero() or r.is_zero():
        return
    assert rf_equal(RationalFunction(p, q), RationalFunction(p * r, q * r))
    prod = rf_mul(RationalFunction(p, q), RationalFunction(r, q))
    assert rf_equal(prod, RationalFunction(p * r, q * q))


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        RationalFunction(Polynomial.constant(1, 1), Polynomial(1))
    with pytest.raises(ZeroDenominator):
        RationalFunction.constant(1, 1) / RationalFunction.constant(1, 0)


def test_partial_derivatives():
    assert partial_derivative(1 + y(1) + y(1) * y(2), 1) == 1 + y(2)
    assert partial_derivative(f_polynomial(2, 1, 1), 2) == 0
    assert partial_derivative(y(1) * y(2) ** 2, 2) == 2 * y(1) * y(2)


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_trop_of_f_polynomial(point):
    form = TropicalForm.of(f_polynomial(3, 1, 3))
    assert trop_eval(form, point) == Atom("F", 1, 3).trop(point)


def test_trop_examples():
    assert trop_eval(TropicalForm.of(f_polynomial(2, 1, 2)), (-1, -1)) == -2
    assert trop_eval(TropicalForm.of(y(1)), (1, 0)) == 1


@given(st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_trop_is_additive_on_factored_products(point):
    a = Factored.from_factors(3, [(F_atom(3, 1, 2), 1), (y_atom(3), -2)])
    b = Factored.from_factors(3, [(F_atom(3, 2, 3), -1), (F_atom(3, 1, 2), 2)])
    assert (a * b).trop(point) == a.trop(point) + b.trop(point)
    ev = trop_of_monomial_in_F((a * b).factors())
    assert ev(point) == a.trop(point) + b.trop(point)


@given(st.lists(st.builds(Fraction, st.integers(1, 9), st.integers(1, 9)), min_size=3, max_size=3))
def test_factored_agrees_with_expansion(point):
    f = Factored.from_factors(
        3, [(F_atom(3, 1, 3), 1), (y_atom(2), 1), (F_atom(3, 2, 3), -1), (F_atom(3, 1, 1), -2)]
    )
    assert f.evaluate(point) == f.to_rational().evaluate(point)
    rf = f.to_rational()
    for k in range(1, 4):
        # quotient rule on the expanded form
        num, den = rf.num, rf.den
        d = (partial_derivative(num, k) * den - num * partial_derivative(den, k)).evaluate(point)
        assert f.gradient(point)[k - 1] == d / den.evaluate(point) ** 2
