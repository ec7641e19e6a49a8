"""Arbitrary-precision gamma and beta via Spouge's approximation.

Floating values are mpmath ``mpf`` numbers.  mpmath supplies correctly rounded
+, -, *, /, sqrt, exp, log and pi at whatever binary precision is active; the
gamma function itself is assembled here so that its error bound is explicit in
``precision_bits``:

    Gamma(w + 1) = (w + a)^(w + 1/2) e^-(w + a) [c_0 + sum_{k=1}^{a-1} c_k / (w + k) + eps]
    |eps| / |Gamma(w + 1)| < a^(-1/2) (2 pi)^-(a + 1/2)   for w > 0

Internal work runs ``GUARD_BITS`` above the requested precision plus enough
extra bits to absorb cancellation in the alternating coefficient sum.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import mpmath
from mpmath import mpf

__all__ = ["GammaPole", "GUARD_BITS", "to_bigfloat", "spouge_order", "gamma_spouge", "beta_fn"]

GUARD_BITS = 32
_LOG2_2PI = math.log2(2 * math.pi)


class GammaPole(ValueError):
    """Gamma evaluated at a non-positive integer."""


def to_bigfloat(value, precision_bits: int) -> mpf:
    """Round an int, Fraction or mpf to ``precision_bits`` (round-to-nearest)."""
    with mpmath.workprec(precision_bits):
        if isinstance(value, Fraction):
            return mpf(value.numerator) / value.denominator
        return +mpf(value)


def _is_pole(z) -> bool:
    if isinstance(z, Fraction):
        return z.denominator == 1 and z <= 0
    if isinstance(z, int):
        return z <= 0
    return z <= 0 and mpmath.isint(z)


def spouge_order(target_bits: int) -> int:
    """Smallest Spouge parameter a whose truncation bound is below 2^-target_bits."""
    a = 2
    while 0.5 * math.log2(a) + (a + 0.5) * _LOG2_2PI < target_bits:
        a += 1
    return a


def _cancellation_bits(a: int) -> int:
    peak = max(
        -math.lgamma(k) + (k - 0.5) * math.log(a - k) + (a - k) for k in range(1, a)
    )
    return max(0, math.ceil(peak / math.log(2))) + 8


@lru_cache(maxsize=16)
def _spouge_coefficients(a: int, wp: int) -> tuple[mpf, ...]:
    with mpmath.workprec(wp):
        coeffs = [mpmath.sqrt(2 * mpmath.pi)]
        fact = mpf(1)  # (k-1)!
        for k in range(1, a):
            if k > 1:
                fact *= k - 1
            c = mpmath.power(a - k, mpf(k) - mpf(1) / 2) * mpmath.exp(a - k) / fact
            coeffs.append(c if k % 2 else -c)
        return tuple(coeffs)


def _spouge_shifted(w: mpf, a: int, coeffs, wp: int) -> mpf:
    """Gamma(w + 1) for w > 0 at working precision ``wp``."""
    with mpmath.workprec(wp):
        s = coeffs[0]
        for k in range(1, a):
            s += coeffs[k] / (w + k)
        base = w + a
        return mpmath.power(base, w + mpf(1) / 2) * mpmath.exp(-base) * s


def gamma_spouge(z, precision_bits: int) -> mpf:
    """Gamma(z) for real z, relative error below 2^-(precision_bits - 8).

    Arguments below 1/2 go through the reflection formula; arguments in
    [1/2, 2) are lifted by the recurrence so Spouge runs with w >= 1.
    """
    if _is_pole(z):
        raise GammaPole(f"Gamma has a pole at {z}")
    target = precision_bits + GUARD_BITS
    a = spouge_order(target)
    wp = target + _cancellation_bits(a)
    coeffs = _spouge_coefficients(a, wp)
    with mpmath.workprec(wp):
        x = to_bigfloat(z, wp)
        if x < mpf(1) / 2:
            # Gamma(x) Gamma(1-x) = pi / sin(pi x)
            g = mpmath.pi / (mpmath.sinpi(x) * _gamma_at_least_half(1 - x, a, coeffs, wp))
        else:
            g = _gamma_at_least_half(x, a, coeffs, wp)
    return to_bigfloat(g, precision_bits)


def _gamma_at_least_half(x: mpf, a: int, coeffs, wp: int) -> mpf:
    with mpmath.workprec(wp):
        if x < 2:
            return _spouge_shifted(x + 1, a, coeffs, wp) / (x * (x + 1))
        return _spouge_shifted(x - 1, a, coeffs, wp)


def beta_fn(a, b, precision_bits: int) -> mpf:
    """Beta(a, b) = Gamma(a) Gamma(b) / Gamma(a + b)."""
    wp = precision_bits + GUARD_BITS
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        s = a + b
    else:
        with mpmath.workprec(wp):
            s = to_bigfloat(a, wp) + to_bigfloat(b, wp)
    ga = gamma_spouge(a, wp)
    gb = gamma_spouge(b, wp)
    gs = gamma_spouge(s, wp)
    with mpmath.workprec(wp):
        out = ga * gb / gs
    return to_bigfloat(out, precision_bits)
