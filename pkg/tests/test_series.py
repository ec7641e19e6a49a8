import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from bernident.bernoulli import bernoulli_poly
from bernident.identities import lemma1_sides, random_rat
from bernident.poly import MultiPoly
from bernident.series import (
    TruncatedSeries,
    carlitz_gf_sides,
    egf_coefficients,
    egf_factor,
    series_mul,
    sum_substituted_egf,
    verify_carlitz_gf,
)

from conftest import rationals


@st.composite
def series(draw, num_vars=2, N=4):
    terms = draw(st.dictionaries(st.tuples(*[st.integers(0, N)] * num_vars), rationals(5, 4), max_size=10))
    return TruncatedSeries(num_vars, N, terms)


def test_egf_factor_examples():
    s = egf_factor(Fraction(2, 3), 0, 6)
    assert s.coefficient((0,)) == 1
    (x,) = MultiPoly.variables(["x"])
    assert egf_coefficients(x, 1)[1] == x - Fraction(1, 2)
    for n in range(21):
        assert egf_coefficients(Fraction(5, 9), 20)[n] * factorial(n) == bernoulli_poly(n)(Fraction(5, 9))


def test_egf_factor_embedding():
    s = egf_factor(Fraction(1, 3), 1, 4, num_vars=3)
    assert all(e[0] == e[2] == 0 for e in s.terms)
    with pytest.raises(IndexError):
        egf_factor(0, 3, 4, num_vars=3)


def test_series_mul_examples():
    a = egf_factor(Fraction(1, 4), 0, 6, 2)
    assert a * TruncatedSeries.one(2, 6) == a
    N = 7
    geom = TruncatedSeries(1, N, {(i,): 1 for i in range(N + 1)})
    one_minus_t = TruncatedSeries(1, N, {(0,): 1, (1,): -1})
    assert series_mul(geom, one_minus_t) == TruncatedSeries.one(1, N)
    with pytest.raises(ValueError):
        series_mul(geom, TruncatedSeries.one(1, N + 1))


@given(series(), series(), series())
def test_series_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(series(N=5), series(N=5))
def test_truncation_soundness(a, b):
    assert (a * b).restrict(3) == a.restrict(3) * b.restrict(3)


def test_truncation_egf():
    x = Fraction(-7, 5)
    assert egf_factor(x, 0, 9).restrict(4) == egf_factor(x, 0, 4)


def test_sum_substituted():
    x = Fraction(2, 7)
    assert sum_substituted_egf(x, 1, 8) == egf_factor(x, 0, 8)
    g = egf_coefficients(x, 3)
    s = sum_substituted_egf(x, 2, 3)
    assert s.coefficient((1, 1)) == 2 * g[2]
    assert s.coefficient((2, 1)) == 3 * g[3]


def test_sum_substituted_symmetric():
    s = sum_substituted_egf(Fraction(1, 3), 3, 5)
    for e, c in s.terms.items():
        for perm in ((e[1], e[0], e[2]), (e[2], e[1], e[0])):
            assert s.coefficient(perm) == c


def test_carlitz_m1():
    assert verify_carlitz_gf(1, 10, [Fraction(3, 8)]).passed


def test_carlitz_symbolic_m2():
    rep = verify_carlitz_gf(2, 8, MultiPoly.variables(["x1", "x2"]))
    assert rep.passed and rep.mode == "symbolic"
    assert rep.detail["lemma1_checked"] == 28


def test_carlitz_m3_matches_lemma1():
    rng = random.Random(31)
    x = [random_rat(rng) for _ in range(3)]
    rep = verify_carlitz_gf(3, 6, x)
    assert rep.passed
    left = rep.detail["left"]
    lhs, _ = lemma1_sides([2, 2, 2], x)
    assert left.coefficient((2, 2, 2)) == lhs / (factorial(2) ** 3)


def test_carlitz_detects_bad_shift():
    x = [Fraction(1, 3), Fraction(-2, 5)]
    left, _ = carlitz_gf_sides(2, 6, x)
    wrong = TruncatedSeries(2, 6)
    for i in range(2):
        term = TruncatedSeries.monomial(2, 6, i) * sum_substituted_egf(x[i], 2, 6)
        j = 1 - i
        term = term * egf_factor(x[j] - x[i], j, 6, 2)  # indicator dropped
        wrong = wrong + term
    assert left != wrong
