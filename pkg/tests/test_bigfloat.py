import random
from fractions import Fraction

import mpmath
import pytest

from bernident.bigfloat import GammaPole, beta_fn, gamma_spouge, spouge_order, to_bigfloat

BITS = 256


def machin_pi(bits: int) -> mpmath.mpf:
    """pi = 16 atan(1/5) - 4 atan(1/239) in fixed point with Python integers."""
    scale = 1 << (bits + 20)

    def atan_inv(k):
        total, term, n, sign = 0, scale // k, 1, 1
        while term:
            total += sign * (term // n)
            term //= k * k
            n += 2
            sign = -sign
        return total

    fixed = 16 * atan_inv(5) - 4 * atan_inv(239)
    with mpmath.workprec(bits + 20):
        return mpmath.mpf(fixed) / scale


def rel_err(a, b):
    with mpmath.workprec(2 * BITS):
        return abs(a - b) / abs(b)


def test_spouge_order_meets_bound():
    for target in (64, 160, 288, 544):
        a = spouge_order(target)
        bound = a ** -0.5 * (2 * mpmath.pi) ** -(a + 0.5)
        assert bound < mpmath.mpf(2) ** -target


def test_factorial_values():
    assert gamma_spouge(5, BITS) == 24
    assert gamma_spouge(Fraction(1), BITS) == 1
    with mpmath.workprec(BITS):
        assert rel_err(gamma_spouge(21, BITS), mpmath.mpf(2432902008176640000)) < mpmath.mpf(2) ** -(BITS - 8)


def test_half_is_sqrt_pi():
    with mpmath.workprec(BITS + 32):
        sqrt_pi = mpmath.sqrt(machin_pi(BITS + 32))
    assert rel_err(gamma_spouge(Fraction(1, 2), BITS), sqrt_pi) < mpmath.mpf(2) ** -(BITS - 10)


def test_recurrence():
    rng = random.Random(12)
    for _ in range(50):
        z = Fraction(rng.randint(1, 400), rng.randint(1, 20))
        if z.denominator == 1:
            continue
        with mpmath.workprec(BITS + 32):
            ratio = gamma_spouge(z + 1, BITS) / (to_bigfloat(z, BITS + 32) * gamma_spouge(z, BITS))
            assert abs(ratio - 1) < mpmath.mpf(2) ** -(BITS - 10)


def test_reflection_and_reference():
    rng = random.Random(13)
    for _ in range(30):
        z = Fraction(rng.randint(1, 1999), 100)
        if z.denominator == 1:
            continue
        zf = to_bigfloat(z, BITS + 64)
        with mpmath.workprec(BITS + 64):
            prod = gamma_spouge(z, BITS) * gamma_spouge(1 - z, BITS)
            assert rel_err(prod, mpmath.pi / mpmath.sinpi(zf)) < mpmath.mpf(2) ** -(BITS - 10)
            assert rel_err(gamma_spouge(z, BITS), mpmath.gamma(zf)) < mpmath.mpf(2) ** -(BITS - 8)
            assert rel_err(gamma_spouge(-z, BITS), mpmath.gamma(-zf)) < mpmath.mpf(2) ** -(BITS - 8)


def test_precision_scaling():
    for z in (Fraction(1, 3), Fraction(7, 2), Fraction(-5, 3), Fraction(97, 7)):
        lo, hi = gamma_spouge(z, 128), gamma_spouge(z, 512)
        assert rel_err(lo, hi) < mpmath.mpf(2) ** -(128 - 8)


@pytest.mark.parametrize("z", [0, -3, Fraction(-2), Fraction(0, 5)])
def test_poles(z):
    with pytest.raises(GammaPole):
        gamma_spouge(z, BITS)


def test_beta():
    assert beta_fn(1, 1, BITS) == 1
    pi = machin_pi(BITS + 32)
    assert rel_err(beta_fn(Fraction(1, 2), Fraction(1, 2), BITS), pi) < mpmath.mpf(2) ** -(BITS - 10)
    rng = random.Random(21)
    for _ in range(20):
        a, b = Fraction(rng.randint(1, 99), 7), Fraction(rng.randint(1, 99), 11)
        assert rel_err(beta_fn(a, b, BITS), beta_fn(b, a, BITS)) < mpmath.mpf(2) ** -(BITS - 10)
    with pytest.raises(GammaPole):
        beta_fn(Fraction(1, 2), Fraction(-1, 2), BITS)
