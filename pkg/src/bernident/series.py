"""Multivariate power series truncated by total degree.

This engine derives Bernoulli coefficients straight from t e^{xt}/(e^t - 1)
by power-series division and never calls into :mod:`bernident.bernoulli`, so
it serves as an independent oracle for it.  Coefficients may come from any
exact commutative ring: Fractions, or MultiPoly when x is an indeterminate.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial, prod
from typing import Mapping, Sequence

from .identities import _fmt_list, compositions, indicator, lemma1_sides
from .poly import MultiPoly
from .report import IdentityReport, stopwatch

__all__ = [
    "TruncatedSeries",
    "egf_coefficients",
    "egf_factor",
    "series_mul",
    "sum_substituted_egf",
    "carlitz_gf_sides",
    "verify_carlitz_gf",
]


def _is_zero(c) -> bool:
    return c == 0


class TruncatedSeries:
    """Power series in t_1..t_k keeping exactly the terms of total degree <= N."""

    __slots__ = ("num_vars", "max_total_degree", "terms")

    def __init__(self, num_vars: int, max_total_degree: int, terms: Mapping | None = None):
        self.num_vars = num_vars
        self.max_total_degree = max_total_degree
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != num_vars:
                raise ValueError(f"exponent {e} has wrong length for {num_vars} variables")
            if sum(e) <= max_total_degree and not _is_zero(c):
                clean[e] = c
        self.terms = clean

    @classmethod
    def one(cls, num_vars: int, N: int) -> "TruncatedSeries":
        return cls(num_vars, N, {(0,) * num_vars: Fraction(1)})

    @classmethod
    def monomial(cls, num_vars: int, N: int, var: int, coeff=Fraction(1)) -> "TruncatedSeries":
        e = [0] * num_vars
        e[var] = 1
        return cls(num_vars, N, {tuple(e): coeff})

    def coefficient(self, exponent: Sequence[int]):
        return self.terms.get(tuple(exponent), Fraction(0))

    def restrict(self, N: int) -> "TruncatedSeries":
        if N > self.max_total_degree:
            raise ValueError("cannot restrict to a higher degree than was computed")
        return TruncatedSeries(self.num_vars, N, self.terms)

    def _check(self, other: "TruncatedSeries"):
        if self.num_vars != other.num_vars or self.max_total_degree != other.max_total_degree:
            raise ValueError(
                f"series shape mismatch: ({self.num_vars}, {self.max_total_degree}) vs "
                f"({other.num_vars}, {other.max_total_degree})"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return TruncatedSeries(self.num_vars, self.max_total_degree, out)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.num_vars, self.max_total_degree, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries(self.num_vars, self.max_total_degree, {e: c * other for e, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if (self.num_vars, self.max_total_degree) != (other.num_vars, other.max_total_degree):
            return False
        return (self - other).is_zero()

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e)):
            mono = "*".join(f"t{i + 1}^{k}" if k > 1 else f"t{i + 1}" for i, k in enumerate(e) if k)
            c = self.terms[e]
            parts.append(f"({c}) * {mono}" if mono else f"({c})")
        return " + ".join(parts)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check(b)
    N = a.max_total_degree
    out: dict = {}
    b_items = sorted(b.terms.items(), key=lambda kv: sum(kv[0]))
    for ea, ca in a.terms.items():
        da = sum(ea)
        for eb, cb in b_items:
            if da + sum(eb) > N:
                break
            e = tuple(p + q for p, q in zip(ea, eb))
            v = ca * cb
            out[e] = out[e] + v if e in out else v
    return TruncatedSeries(a.num_vars, N, out)


def egf_coefficients(x, N: int) -> list:
    """Coefficients c_0..c_N of t e^{xt} / (e^t - 1) as a univariate series.

    Divides e^{xt} by (e^t - 1)/t = sum_d t^d/(d+1)!, whose constant term is 1.
    """
    num = []
    power = Fraction(1)
    for d in range(N + 1):
        num.append(power * Fraction(1, factorial(d)))
        power = power * x
    den = [Fraction(1, factorial(d + 1)) for d in range(N + 1)]
    q: list = []
    for d in range(N + 1):
        acc = num[d]
        for j in range(1, d + 1):
            acc = acc - den[j] * q[d - j]
        q.append(acc)
    return q


def egf_factor(x, var: int, N: int, num_vars: int = 1) -> TruncatedSeries:
    """t_var e^{x t_var} / (e^{t_var} - 1) embedded in a ``num_vars``-variable series."""
    if not 0 <= var < num_vars:
        raise IndexError(f"variable index {var} out of range for {num_vars} variables")
    terms = {}
    for d, c in enumerate(egf_coefficients(x, N)):
        e = [0] * num_vars
        e[var] = d
        terms[tuple(e)] = c
    return TruncatedSeries(num_vars, N, terms)


def sum_substituted_egf(x, m: int, N: int) -> TruncatedSeries:
    """u e^{xu} / (e^u - 1) with u = t_1 + ... + t_m, expanded multinomially."""
    g = egf_coefficients(x, N)
    terms = {}
    for d, c in enumerate(g):
        for e in compositions(d, m):
            multinomial = factorial(d) // prod(factorial(k) for k in e)
            terms[e] = c * multinomial
    return TruncatedSeries(m, N, terms)


def _coerce_x(x: Sequence):
    return [v if isinstance(v, MultiPoly) else Fraction(v) for v in x]


def carlitz_gf_sides(m: int, N: int, x: Sequence) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Left and right sides of the generating-function form of the generalized Carlitz identity.

    left  = (t_1 + ... + t_m) prod_j t_j e^{x_j t_j} / (e^{t_j} - 1)
    right = sum_i t_i U(x_i) prod_{j != i} t_j e^{(x_j - x_i + [j > i]) t_j} / (e^{t_j} - 1)

    where U(x) = u e^{xu}/(e^u - 1) at u = t_1 + ... + t_m.
    """
    if m < 1 or N < 1:
        raise ValueError("need m >= 1 and N >= 1")
    if len(x) != m:
        raise ValueError("x must have m entries")
    x = _coerce_x(x)
    total = TruncatedSeries(m, N)
    for i in range(m):
        total = total + TruncatedSeries.monomial(m, N, i)
    left = total
    for j in range(m):
        left = left * egf_factor(x[j], j, N, m)

    right = TruncatedSeries(m, N)
    for i in range(m):
        term = TruncatedSeries.monomial(m, N, i) * sum_substituted_egf(x[i], m, N)
        for j in range(m):
            if j != i:
                term = term * egf_factor(x[j] - x[i] + indicator(j, i), j, N, m)
        right = right + term
    return left, right


def verify_carlitz_gf(m: int, N: int, x: Sequence, check_lemma: bool = True) -> IdentityReport:
    """Compare both series coefficient by coefficient up to total degree N.

    With ``check_lemma`` every coefficient at (n_1..n_m), all n_i >= 1, is also
    compared with the matching lemma1 side divided by n_1! ... n_m!.
    """
    with stopwatch() as sw:
        left, right = carlitz_gf_sides(m, N, x)
        diff = left - right
        mismatches = []
        checked = 0
        if check_lemma:
            xs = _coerce_x(x)
            for total in range(m, N + 1):
                for e in compositions(total, m):
                    if min(e) < 1:
                        continue
                    lhs, rhs = lemma1_sides(e, xs)
                    norm = Fraction(1, prod(factorial(k) for k in e))
                    checked += 1
                    if left.coefficient(e) - lhs * norm != 0 or right.coefficient(e) - rhs * norm != 0:
                        mismatches.append(e)
    symbolic = any(isinstance(v, MultiPoly) for v in x)
    passed = diff.is_zero() and not mismatches
    difference = str(diff)
    if mismatches and diff.is_zero():
        difference = f"lemma1 mismatch at {mismatches[0]}"
    return IdentityReport(
        identity_id="carlitz-gf",
        mode="symbolic" if symbolic else "exact-numeric",
        parameters={
            "m": str(m),
            "N": str(N),
            "x": _fmt_list(x),
            "lemma1_coefficients": str(checked),
        },
        lhs=f"series({len(left.terms)} terms to degree {N})",
        rhs=f"series({len(right.terms)} terms to degree {N})",
        difference=difference,
        passed=passed,
        elapsed=sw[0],
        detail={"left": left, "right": right, "lemma1_checked": checked},
    )
