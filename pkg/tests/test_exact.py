import random
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from bernident.exact import binom_general, harmonic, parse_rat, pochhammer

from conftest import rationals


def test_binom_examples():
    assert binom_general(Fraction(7, 3), 0) == 1
    assert binom_general(-1, 5) == -1
    # (1/2)(-1/2)/2! computed by hand
    assert binom_general(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert binom_general(Fraction(5, 7), -1) == 0
    assert binom_general(4, 6) == 0


def test_pochhammer_examples():
    assert pochhammer(Fraction(5, 2), 0) == 1
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)


def test_pochhammer_against_binomial():
    rng = random.Random(7)
    for _ in range(50):
        p = Fraction(rng.randint(-20, 20), rng.randint(1, 12))
        k = rng.randint(0, 12)
        assert pochhammer(p, k) == (-1) ** k * binom_general(-p, k) * factorial(k)


def test_harmonic():
    assert harmonic(0) == 0
    assert harmonic(1) == 1
    assert harmonic(4) == Fraction(25, 12)
    with pytest.raises(ValueError):
        harmonic(-1)


@given(rationals(), rationals(), st.integers(0, 12))
def test_chu_vandermonde(a, b, n):
    lhs = sum(binom_general(a, k) * binom_general(b, n - k) for k in range(n + 1))
    assert lhs == binom_general(a + b, n)


def test_chu_vandermonde_hundred_pairs():
    rng = random.Random(2024)
    for _ in range(100):
        a = Fraction(rng.randint(-20, 20), rng.randint(1, 12))
        b = Fraction(rng.randint(-20, 20), rng.randint(1, 12))
        for n in range(13):
            lhs = sum(binom_general(a, k) * binom_general(b, n - k) for k in range(n + 1))
            assert lhs == binom_general(a + b, n)


@given(rationals(), st.integers(0, 12))
def test_pascal(r, k):
    assert binom_general(r, k) == binom_general(r - 1, k - 1) + binom_general(r - 1, k)


def test_integrality():
    for n in range(31):
        for k in range(n + 1):
            v = binom_general(n, k)
            assert v.denominator == 1
            assert v == comb(n, k)


@given(rationals(), rationals())
def test_rat_closure(a, b):
    for v in (a + b, a - b, a * b) + ((a / b,) if b else ()):
        assert v.denominator > 0
        from math import gcd

        assert gcd(v.numerator, v.denominator) == 1
    assert Fraction(0, 5).denominator == 1


@pytest.mark.parametrize("text,value", [("3", Fraction(3)), ("-1/2", Fraction(-1, 2)), ("4/6", Fraction(2, 3))])
def test_parse_rat(text, value):
    assert parse_rat(text) == value


@pytest.mark.parametrize("text", ["1.5", "1/0", "x", ""])
def test_parse_rat_rejects(text):
    with pytest.raises(ValueError):
        parse_rat(text)
