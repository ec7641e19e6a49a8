"""Bernoulli numbers (B_1 = -1/2 convention) and Bernoulli polynomials."""
from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb

from .poly import UniPoly

__all__ = [
    "BernoulliCache",
    "NegativeBernoulliIndex",
    "bernoulli_number",
    "bernoulli_poly",
    "bernoulli_eval",
]


class NegativeBernoulliIndex(ValueError):
    """A Bernoulli number or polynomial was requested at a negative index."""


class BernoulliCache:
    """Growable table B_0..B_max filled from sum_{k<=n} C(n+1,k) B_k = 0.

    Requesting B_n fills every index up to n.  Growth happens under a lock, so
    concurrent first requests see one consistent table.
    """

    def __init__(self):
        self.values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self.values)

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise NegativeBernoulliIndex(f"B_{n} requested")
        values = self.values
        if n < len(values):
            return values[n]
        with self._lock:
            while len(self.values) <= n:
                m = len(self.values)
                s = sum(comb(m + 1, k) * self.values[k] for k in range(m))
                self.values.append(-s / (m + 1))
        return self.values[n]


_CACHE = BernoulliCache()


def bernoulli_number(n: int) -> Fraction:
    return _CACHE.get(n)


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> UniPoly:
    """B_n(x) = sum_k C(n,k) B_k x^(n-k), monic of degree n."""
    if n < 0:
        raise NegativeBernoulliIndex(f"B_{n}(x) requested")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = comb(n, k) * bernoulli_number(k)
    return UniPoly(coeffs)


def bernoulli_eval(n: int, x):
    """B_n(x) at a rational point, or at any ring element (e.g. a MultiPoly)."""
    return bernoulli_poly(n)(x)
