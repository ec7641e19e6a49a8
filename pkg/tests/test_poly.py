from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bernident.bernoulli import bernoulli_poly
from bernident.poly import (
    ArityError,
    MultiPoly,
    NotDivisible,
    UniPoly,
    derivative,
    divide_exact,
    poly_arith,
    substitute,
)

from conftest import rationals


@st.composite
def multipolys(draw, arity=None, max_terms=12, max_exp=3):
    arity = draw(st.integers(1, 4)) if arity is None else arity
    terms = draw(
        st.dictionaries(
            st.tuples(*[st.integers(0, max_exp)] * arity),
            rationals(9, 6),
            max_size=max_terms,
        )
    )
    return MultiPoly(arity, terms)


def same_arity_pair(n=2, **kw):
    return st.integers(1, 4).flatmap(lambda a: st.tuples(*[multipolys(a, **kw)] * n))


X, Y, Z = MultiPoly.variables(["x", "y", "z"])


def test_canonical_form():
    p = MultiPoly(2, {(1, 0): 0, (0, 1): Fraction(2, 4)})
    assert p.terms == {(0, 1): Fraction(1, 2)}
    with pytest.raises(ArityError):
        MultiPoly(2, {(1,): 1})


def test_arith_examples():
    p = X * Y + 3
    assert poly_arith("add", p, poly_arith("neg", p)).is_zero()
    (t,) = MultiPoly.variables(["t"])
    assert poly_arith("mul", 1 + t, 1 - t) == 1 - t ** 2
    assert poly_arith("scale", t, Fraction(1, 3)) == t / 3


def test_arity_mismatch():
    (t,) = MultiPoly.variables(["t"])
    with pytest.raises(ArityError):
        X + t


@given(same_arity_pair(3, max_terms=8))
def test_ring_axioms(abc):
    a, b, c = abc
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a * 1 == a and a + 0 == a
    assert (a - a).is_zero()


@given(same_arity_pair(2, max_terms=6))
def test_divide_exact_roundtrip(qh):
    q, h = qh
    if q.is_zero():
        return
    assert divide_exact(q * h, q) == h


@given(same_arity_pair(3, max_terms=5, max_exp=2), st.data())
def test_substitute_is_homomorphism(abr, data):
    a, b, rep = abr
    var = data.draw(st.integers(0, a.arity - 1))
    assert substitute(a * b, var, rep) == substitute(a, var, rep) * substitute(b, var, rep)
    assert substitute(a + b, var, rep) == substitute(a, var, rep) + substitute(b, var, rep)


def test_substitute_examples():
    (x,) = MultiPoly.variables(["x"])
    assert substitute(x ** 2, 0, 2 * x) == 4 * x ** 2
    b2 = bernoulli_poly(2).lift(1, 0, ["x"])
    assert substitute(b2, 0, 1 - x) == b2
    assert substitute(X + Y + Z, 2, 1 - X - Y) == 1
    with pytest.raises(IndexError):
        substitute(x, 1, x)


def test_divide_examples():
    x, y = MultiPoly.variables(["x", "y"])
    assert divide_exact(x ** 2 - y ** 2, x - y) == x + y
    b3 = lambda a: bernoulli_poly(3)(a)  # noqa: E731
    q = divide_exact(b3(x) - b3(y), x - y)
    assert q * (x - y) == b3(x) - b3(y)
    with pytest.raises(NotDivisible):
        divide_exact(x ** 2 + 1, x - y)
    with pytest.raises(ZeroDivisionError):
        divide_exact(x, MultiPoly.constant(2, 0))


def test_derivative_examples():
    x, y = MultiPoly.variables(["x", "y"])
    assert derivative(x ** 2 * y, 0) == 2 * x * y
    assert derivative(x ** 2, 1).is_zero()
    (u,) = MultiPoly.variables(["x"])
    lift = lambda n: bernoulli_poly(n).lift(1, 0, ["x"])  # noqa: E731
    assert derivative(lift(3), 0) == 3 * lift(2)
    with pytest.raises(IndexError):
        derivative(x, 5)


def test_rendering():
    x, y = MultiPoly.variables(["x", "y"])
    assert str(MultiPoly.constant(2, 0)) == "0"
    assert str(x ** 2 * y - Fraction(1, 2) * x + 3) == "1 * x^2*y + -1/2 * x + 3"
    assert str(bernoulli_poly(2)) == "1 * x^2 + -1 * x + 1/6"
    assert str(MultiPoly.variable(3, 1)) == "1 * x2"


def test_evaluate_matches_substitution():
    p = X ** 2 * Y - 3 * Z + Fraction(1, 7)
    pt = (Fraction(1, 2), Fraction(-3), Fraction(5, 4))
    q = p
    for i, v in enumerate(pt):
        q = q.substitute(i, v)
    assert q == p.evaluate(pt)


def test_unipoly_roundtrip():
    b = bernoulli_poly(7)
    assert b.lift(1, 0).to_unipoly() == b
    assert b.lift(3, 2).evaluate((0, 0, Fraction(1, 3))) == b(Fraction(1, 3))
