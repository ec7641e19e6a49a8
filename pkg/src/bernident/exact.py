"""Exact rational scalars and the combinatorial primitives built on them.

``Rat`` is :class:`fractions.Fraction`: always in lowest terms with a positive
denominator, zero stored as ``0/1``.  The primitives below are written against
ring operations only (``+``, ``-``, ``*`` and division by an integer), so they
also accept a :class:`~bernident.poly.MultiPoly` where the parameter is an
indeterminate.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import factorial

Rat = Fraction

__all__ = [
    "Rat",
    "binom_general",
    "pochhammer",
    "harmonic",
    "factorial",
    "parse_rat",
]


def binom_general(r, k: int):
    """Generalized binomial coefficient r(r-1)...(r-k+1)/k!.

    Returns 0 for k < 0.  For a non-negative integer ``r`` with ``k > r`` the
    falling product passes through zero, so the usual vanishing comes for free.
    """
    if k < 0:
        return Fraction(0)
    acc = Fraction(1)
    for i in range(k):
        acc = acc * (r - i)
    if isinstance(acc, Fraction):
        return acc / factorial(k)
    return acc * Fraction(1, factorial(k))


def pochhammer(p, k: int):
    """Rising factorial p(p+1)...(p+k-1); ``pochhammer(p, 0) == 1``."""
    if k < 0:
        raise ValueError("pochhammer index must be non-negative")
    acc = Fraction(1)
    for i in range(k):
        acc = acc * (p + i)
    return acc


def harmonic(n: int) -> Fraction:
    if n < 0:
        raise ValueError("harmonic number needs n >= 0")
    return sum((Fraction(1, i) for i in range(1, n + 1)), Fraction(0))


_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rat(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` into a Fraction (no floats, no decimals)."""
    m = _RAT_RE.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)

