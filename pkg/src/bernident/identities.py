"""Evaluators and verifiers for the Bernoulli-polynomial identities.

Every verifier works in one of two exact modes:

* exact-numeric: parameters are Fractions and both sides are rationals;
* symbolic: some parameters are indeterminates (``MultiPoly`` variables) and
  both sides are polynomials, compared term by term.

Both sides of each identity are polynomials in the free parameters, so a
symbolic pass certifies the identity for all complex values of them.

The gamma-Miki check is the one transcendental case and runs in bigfloat mode.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Sequence

import mpmath

from .bernoulli import NegativeBernoulliIndex, bernoulli_number, bernoulli_poly
from .bigfloat import GammaPole, beta_fn, gamma_spouge, to_bigfloat
from .exact import binom_general, harmonic, pochhammer
from .poly import MultiPoly, UniPoly
from .report import IdentityReport, stopwatch

__all__ = [
    "DegenerateEvaluation",
    "PreconditionError",
    "Theorem1Params",
    "GammaParams",
    "compositions",
    "random_rat",
    "verify_miki",
    "verify_matiyasevich",
    "pan_sun_sides",
    "verify_pan_sun_poly",
    "woodcock_A",
    "verify_woodcock",
    "bracket_sum",
    "sun_pan_sides",
    "verify_sun_pan",
    "theorem1_sides",
    "verify_theorem1",
    "lemma1_sides",
    "verify_lemma1",
    "theorem2_normalized_sides",
    "verify_theorem2",
    "gamma_miki_sides",
    "verify_gamma_miki",
]


class PreconditionError(ValueError):
    """Parameters outside an identity's domain."""


class DegenerateEvaluation(PreconditionError):
    """Numeric evaluation at a point where a denominator (x - y) vanishes."""


def indicator(j: int, i: int) -> int:
    return 1 if j > i else 0


def random_rat(rng: random.Random, num: int = 20, den: int = 12) -> Fraction:
    """Rational with numerator in [-num, num] and denominator in [1, den]."""
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def compositions(n: int, m: int, bounds: Sequence[int] | None = None) -> Iterator[tuple[int, ...]]:
    """Tuples (k_1..k_m) of non-negative integers summing to n, with k_j <= bounds[j].

    Odometer over the first m-1 parts (first part fastest, i.e. colex order);
    the last part absorbs the remainder.  Branches whose partial sum exceeds n
    or whose part exceeds its bound are cut before descending further.
    """
    if m == 0:
        if n == 0:
            yield ()
        return
    caps = [n if bounds is None else min(n, b) for b in (bounds or [n] * m)]
    if any(c < 0 for c in caps):
        return
    k = [0] * m
    partial = 0
    while True:
        rest = n - partial
        if 0 <= rest <= caps[-1]:
            k[-1] = rest
            yield tuple(k)
        i = 0
        while i < m - 1:
            if k[i] < caps[i] and partial < n:
                k[i] += 1
                partial += 1
                break
            partial -= k[i]
            k[i] = 0
            i += 1
        else:
            return


def _binom_bound(r, n: int) -> int:
    """Largest k with binom(r, k) possibly nonzero (r a non-negative integer caps it)."""
    if isinstance(r, (int, Fraction)) and Fraction(r).denominator == 1 and r >= 0:
        return int(r)
    return n


def _is_symbolic(*values) -> bool:
    return any(isinstance(v, (MultiPoly, UniPoly)) for v in values)


def _exact_report(identity_id, parameters, lhs, rhs, elapsed, detail=None) -> IdentityReport:
    diff = lhs - rhs
    return IdentityReport(
        identity_id=identity_id,
        mode="symbolic" if _is_symbolic(lhs, rhs, diff) else "exact-numeric",
        parameters={k: str(v) for k, v in parameters.items()},
        lhs=str(lhs),
        rhs=str(rhs),
        difference=str(diff),
        passed=diff == 0,
        elapsed=elapsed,
        detail=detail or {},
    )


def _fmt_value(v) -> str:
    if isinstance(v, MultiPoly):
        return v.variable_name() or f"({v})"
    return str(v)


def _fmt_list(values) -> str:
    return ",".join(_fmt_value(v) for v in values)


# --- Miki and Matiyasevich ---------------------------------------------------


def miki_sides(n: int) -> tuple[Fraction, Fraction]:
    if n < 3:
        raise PreconditionError("Miki's identity needs n >= 3")
    B = bernoulli_number
    terms = [(k, B(k) * B(n - k) / (k * (n - k))) for k in range(2, n - 1)]
    lhs = sum((t for _, t in terms), Fraction(0))
    rhs = sum((binom_general(n, k) * t for k, t in terms), Fraction(0))
    rhs += 2 * harmonic(n) * B(n) / n
    return lhs, rhs


def verify_miki(n: int) -> IdentityReport:
    with stopwatch() as sw:
        lhs, rhs = miki_sides(n)
    return _exact_report("miki", {"n": n}, lhs, rhs, sw[0])


def matiyasevich_sides(n: int) -> tuple[Fraction, Fraction]:
    if n < 4:
        raise PreconditionError("Matiyasevich's identity needs n >= 4")
    B = bernoulli_number
    prods = [(k, B(k) * B(n - k)) for k in range(2, n - 1)]
    lhs = (n + 2) * sum((p for _, p in prods), Fraction(0))
    rhs = 2 * sum((binom_general(n + 2, k) * p for k, p in prods), Fraction(0))
    rhs += n * (n + 1) * B(n)
    return lhs, rhs


def verify_matiyasevich(n: int) -> IdentityReport:
    with stopwatch() as sw:
        lhs, rhs = matiyasevich_sides(n)
    return _exact_report("matiyasevich", {"n": n}, lhs, rhs, sw[0])


# --- Pan-Sun polynomial identities -----------------------------------------

PAN_SUN_KINDS = ("miki-type", "matiyasevich-type")


def _pan_sun_sum(which: str, n: int, x, y, literal: bool):
    Bx = lambda k: bernoulli_poly(k)(x)  # noqa: E731
    By = lambda k: bernoulli_poly(k)(y)  # noqa: E731
    dxy, dyx = x - y, y - x
    if which == "miki-type":
        first = sum((Bx(k) * By(n - k) * Fraction(1, k * (n - k)) for k in range(1, n)), Fraction(0))
        # the second sum runs to k = n; stopping at n - 1 (as typeset) breaks the identity
        top = n - 1 if literal else n
        second = sum(
            (
                binom_general(n - 1, k - 1)
                * (bernoulli_poly(k)(dxy) * By(n - k) + bernoulli_poly(k)(dyx) * Bx(n - k))
                * Fraction(1, k * k)
                for k in range(1, top + 1)
            ),
            Fraction(0),
        )
    else:
        first = sum((Bx(k) * By(n - k) for k in range(n + 1)), Fraction(0))
        second = sum(
            (
                binom_general(n + 1, k + 1)
                * (bernoulli_poly(k)(dxy) * By(n - k) + bernoulli_poly(k)(dyx) * Bx(n - k))
                * Fraction(1, k + 2)
                for k in range(n + 1)
            ),
            Fraction(0),
        )
    return first - second


def pan_sun_sides(which: str, n: int, x=None, y=None, literal: bool = False):
    """Both sides of a Pan-Sun identity.

    Symbolic (x, y omitted): denominators are cleared, i.e. the miki-type
    identity is multiplied by n(x-y) and the matiyasevich-type one by
    (n+2)(x-y)^3, and the exact divisibility of the right-hand numerator is
    certified with ``divide_exact``.  Numeric: evaluated as stated at x != y.
    """
    if which not in PAN_SUN_KINDS:
        raise PreconditionError(f"unknown Pan-Sun identity {which!r}")
    if which == "miki-type" and n < 2:
        raise PreconditionError("miki-type Pan-Sun identity needs n >= 2")
    if which == "matiyasevich-type" and n < 1:
        raise PreconditionError("matiyasevich-type Pan-Sun identity needs n >= 1")
    symbolic = x is None or y is None
    if symbolic:
        x, y = MultiPoly.variables(("x", "y"))
    else:
        x, y = Fraction(x), Fraction(y)
        if x == y:
            raise DegenerateEvaluation("x = y makes the (x - y) denominators vanish")
    s = _pan_sun_sum(which, n, x, y, literal)
    Bn = lambda k, a: bernoulli_poly(k)(a)  # noqa: E731
    d = x - y
    if which == "miki-type":
        numer = Bn(n, x) - Bn(n, y)
        if symbolic:
            numer.divide_exact(d)
            lhs = n * d * s
            rhs = d * harmonic(n - 1) * (Bn(n, x) + Bn(n, y)) + numer
        else:
            lhs = s
            rhs = harmonic(n - 1) * (Bn(n, x) + Bn(n, y)) / n + numer / (n * d)
    else:
        if symbolic:
            numer = (n + 2) * d * (Bn(n + 1, x) + Bn(n + 1, y)) - 2 * (Bn(n + 2, x) - Bn(n + 2, y))
            numer.divide_exact(d ** 3)
            lhs = (n + 2) * d ** 3 * s
            rhs = numer
        else:
            lhs = s
            rhs = (Bn(n + 1, x) + Bn(n + 1, y)) / d ** 2 - Fraction(2, n + 2) * (
                Bn(n + 2, x) - Bn(n + 2, y)
            ) / d ** 3
    return lhs, rhs


def verify_pan_sun_poly(which: str, n: int, x=None, y=None, literal: bool = False) -> IdentityReport:
    with stopwatch() as sw:
        lhs, rhs = pan_sun_sides(which, n, x, y, literal)
    ident = "pan-sun-3" if which == "miki-type" else "pan-sun-4"
    params = {"n": n}
    if x is not None and y is not None:
        params.update(x=Fraction(x), y=Fraction(y))
    if literal:
        params["reading"] = "literal"
    return _exact_report(ident, params, lhs, rhs, sw[0])


# --- Woodcock ---------------------------------------------------------------


def woodcock_A(m: int, n: int) -> UniPoly:
    """A_{m,n}(x) = (1/n) sum_k C(n,k) (-1)^k B_{m+k}(x) B_{n-k}(2x) - (1/n) B_m(x) B_n(x)."""
    if m < 0:
        raise PreconditionError("A_{m,n} needs m >= 0")
    if n < 1:
        raise PreconditionError("A_{m,n} needs n >= 1 (it carries a 1/n factor)")
    (x,) = MultiPoly.variables(("x",))
    two_x = 2 * x
    acc = MultiPoly.constant(1, 0, ("x",))
    for k in range(n + 1):
        b_2x = bernoulli_poly(n - k).lift(1, 0, ("x",)).substitute(0, two_x)
        acc = acc + ((-1) ** k * binom_general(n, k)) * bernoulli_poly(m + k).lift(1, 0, ("x",)) * b_2x
    acc = acc - bernoulli_poly(m).lift(1, 0, ("x",)) * bernoulli_poly(n).lift(1, 0, ("x",))
    return (acc * Fraction(1, n)).to_unipoly()


def verify_woodcock(m: int, n: int, literal: bool = False) -> IdentityReport:
    """A_{m-1,n}(x) = A_{n-1,m}(x).

    ``literal=True`` checks the typeset A_{m-1,n} = A_{m,n-1} instead, which
    only holds on the diagonal n = m + 1 where it coincides with the above.
    """
    if m < 1 or n < 2:
        raise PreconditionError("Woodcock check needs m >= 1 and n >= 2")
    with stopwatch() as sw:
        lhs = woodcock_A(m - 1, n)
        rhs = woodcock_A(m, n - 1) if literal else woodcock_A(n - 1, m)
    params = {"m": m, "n": n}
    if literal:
        params["reading"] = "literal"
    return _exact_report("woodcock", params, lhs, rhs, sw[0])


# --- Sun-Pan bracket identity -----------------------------------------------


def bracket_sum(s, t, x, y, n: int):
    """[s t; x y]_n = sum_k (-1)^k C(s,k) C(t,n-k) B_{n-k}(x) B_k(y)."""
    acc = Fraction(0)
    for k in range(n + 1):
        cs = binom_general(s, k)
        if cs == 0:
            continue
        ct = binom_general(t, n - k)
        if ct == 0:
            continue
        term = cs * ct * bernoulli_poly(n - k)(x) * bernoulli_poly(k)(y)
        acc = acc - term if k % 2 else acc + term
    return acc


def _sun_pan_ring(r, s, x, y):
    """Fill omitted parameters with indeterminates of a 4-variable ring."""
    values = (r, s, x, y)
    if all(v is not None for v in values):
        return tuple(Fraction(v) for v in values)
    gens = MultiPoly.variables(("r", "s", "x", "y"))
    return tuple(g if v is None else Fraction(v) for g, v in zip(gens, values))


def sun_pan_sides(n: int, r=None, s=None, x=None, y=None):
    """Return (r[s t; x y]_n, s[t r; y z]_n, t[r s; z x]_n) with t = n-r-s, z = 1-x-y."""
    r, s, x, y = _sun_pan_ring(r, s, x, y)
    t = n - r - s
    z = 1 - x - y
    return r * bracket_sum(s, t, x, y, n), s * bracket_sum(t, r, y, z, n), t * bracket_sum(r, s, z, x, n)


def verify_sun_pan(n: int, r=None, s=None, x=None, y=None) -> IdentityReport:
    with stopwatch() as sw:
        a, b, c = sun_pan_sides(n, r, s, x, y)
        lhs = a + b + c
    params = {"n": n}
    for name, v in zip("rsxy", (r, s, x, y)):
        params[name] = name if v is None else Fraction(v)
    return _exact_report("sun-pan", params, lhs, Fraction(0), sw[0])


# --- theorem1: multi-index Bernoulli convolution -------------------------


@dataclass(frozen=True)
class Theorem1Params:
    """m, n and the lists r_1..r_m, x_1..x_m (Fractions or indeterminates).

    ``r_last`` = n - sum(r) and ``shift(i, j)`` = x_j - x_i + [j > i] are
    recomputed on every access; indices are 0-based.
    """

    m: int
    n: int
    r: tuple
    x: tuple

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise PreconditionError("theorem1 needs positive m and n")
        if len(self.r) != self.m or len(self.x) != self.m:
            raise PreconditionError("r and x must both have m entries")
        object.__setattr__(self, "r", tuple(_as_ring(v) for v in self.r))
        object.__setattr__(self, "x", tuple(_as_ring(v) for v in self.x))

    @property
    def r_last(self):
        acc = Fraction(self.n)
        for v in self.r:
            acc = acc - v
        return acc

    def shift(self, i: int, j: int):
        return self.x[j] - self.x[i] + indicator(j, i)

    @classmethod
    def symbolic(cls, m: int, n: int) -> "Theorem1Params":
        names = [f"r{j + 1}" for j in range(m)] + [f"x{j + 1}" for j in range(m)]
        gens = MultiPoly.variables(names)
        return cls(m, n, gens[:m], gens[m:])

    @classmethod
    def random(cls, m: int, n: int, rng: random.Random) -> "Theorem1Params":
        return cls(m, n, tuple(random_rat(rng) for _ in range(m)), tuple(random_rat(rng) for _ in range(m)))


def _as_ring(v):
    return v if isinstance(v, MultiPoly) else Fraction(v)


def _bern_table(arg, top: int) -> list:
    return [bernoulli_poly(k)(arg) for k in range(top + 1)]


def _binom_table(r, top: int) -> list:
    return [binom_general(r, k) for k in range(top + 1)]


def _product(factors):
    acc = factors[0]
    for f in factors[1:]:
        acc = acc * f
    return acc


def theorem1_sides(params: Theorem1Params, reflect: bool = False):
    """Both sides of the m-fold symmetric identity.

    left  = r_{m+1} sum_{|k|=n} prod_j C(r_j,k_j) B_{k_j}(x_j)
    right = -sum_i r_i sum_{|k|=n} C(r_{m+1},k_i) B_{k_i}(1-x_i) prod_{j!=i} C(r_j,k_j) B_{k_j}(x_j-x_i+[j>i])

    ``reflect=True`` replaces B_k(1-x_i) by (-1)^k B_k(x_i).
    """
    m, n = params.m, params.n
    r, x, r_last = params.r, params.x, params.r_last
    binoms = [_binom_table(rj, n) for rj in r]
    binom_last = _binom_table(r_last, n)
    bounds = [_binom_bound(rj, n) for rj in r]

    total = Fraction(0)
    bx = [_bern_table(xj, n) for xj in x]
    for k in compositions(n, m, bounds):
        total = total + _product([binoms[j][k[j]] * bx[j][k[j]] for j in range(m)])
    left = r_last * total

    right = Fraction(0)
    for i in range(m):
        if reflect:
            own = [(-1) ** k * b for k, b in enumerate(_bern_table(x[i], n))]
        else:
            own = _bern_table(1 - x[i], n)
        shifted = {j: _bern_table(params.shift(i, j), n) for j in range(m) if j != i}
        b_i = list(bounds)
        b_i[i] = _binom_bound(r_last, n)
        inner = Fraction(0)
        for k in compositions(n, m, b_i):
            factors = [binom_last[k[i]] * own[k[i]]]
            factors += [binoms[j][k[j]] * shifted[j][k[j]] for j in range(m) if j != i]
            inner = inner + _product(factors)
        right = right - r[i] * inner
    return left, right


def verify_theorem1(params: Theorem1Params, seed: int | None = None) -> IdentityReport:
    with stopwatch() as sw:
        lhs, rhs = theorem1_sides(params)
    p = {"m": params.m, "n": params.n, "r": _fmt_list(params.r), "x": _fmt_list(params.x)}
    if seed is not None:
        p["seed"] = str(seed)
    return _exact_report("theorem1", p, lhs, rhs, sw[0])


# --- lemma1: generalized Carlitz identity -----------------------------------


def lemma1_sides(n_list: Sequence[int], x: Sequence):
    """Both sides of the generalized Carlitz identity for exponents n_1..n_m.

    Right-side terms with a vanishing C(n_j, k_j) are never enumerated (k_j is
    capped at n_j for j != i), which forces k_i >= n_i >= 1, so B_{k_i - 1}
    always has a valid index.  A negative index here would be a bug and raises
    ``NegativeBernoulliIndex``.
    """
    m = len(n_list)
    if m == 0 or len(x) != m:
        raise PreconditionError("n_list and x must be non-empty and of equal length")
    if any(ni < 1 for ni in n_list):
        raise PreconditionError("every n_i must be >= 1")
    x = [_as_ring(v) for v in x]
    N = sum(n_list)

    bx = [_bern_table(xi, N) for xi in x]
    lhs = Fraction(0)
    for i in range(m):
        factors = [n_list[i] * bx[i][n_list[i] - 1]]
        factors += [bx[j][n_list[j]] for j in range(m) if j != i]
        lhs = lhs + _product(factors)

    rhs = Fraction(0)
    for i in range(m):
        # C(n_j, k_j) B_{k_j}(x_j - x_i + [j > i]) for k_j = 0..n_j
        weighted = {
            j: [comb(n_list[j], k) * b for k, b in enumerate(_bern_table(x[j] - x[i] + indicator(j, i), n_list[j]))]
            for j in range(m)
            if j != i
        }
        bounds = [N if j == i else n_list[j] for j in range(m)]
        inner = Fraction(0)
        for k in compositions(N, m, bounds):
            if any(comb(n_list[j], k[j]) == 0 for j in range(m) if j != i):
                continue
            if k[i] - 1 < 0:
                raise NegativeBernoulliIndex(f"B_{k[i] - 1} reached in lemma1 at k={k}")
            factors = [bx[i][k[i] - 1]]
            factors += [weighted[j][k[j]] for j in range(m) if j != i]
            inner = inner + _product(factors)
        rhs = rhs + n_list[i] * inner
    return lhs, rhs


def verify_lemma1(n_list: Sequence[int], x: Sequence, seed: int | None = None) -> IdentityReport:
    with stopwatch() as sw:
        lhs, rhs = lemma1_sides(n_list, x)
    p = {"n": _fmt_list(n_list), "x": _fmt_list(x)}
    if seed is not None:
        p["seed"] = str(seed)
    return _exact_report("lemma1", p, lhs, rhs, sw[0])


# --- theorem2: gamma form, checked after normalization ----------------------


def _non_integral(v: Fraction) -> bool:
    return Fraction(v).denominator != 1


@dataclass(frozen=True)
class GammaParams:
    """m, n and non-integral p_1..p_m; p_last = -(p_1 + ... + p_m + n)."""

    m: int
    n: int
    p: tuple

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise PreconditionError("theorem2 needs positive m and n")
        if len(self.p) != self.m:
            raise PreconditionError("p must have m entries")
        object.__setattr__(self, "p", tuple(Fraction(v) for v in self.p))
        if not all(_non_integral(v) for v in self.p):
            raise PreconditionError("every p_j must be non-integral")
        if not _non_integral(self.p_last):
            raise PreconditionError(f"p_last = {self.p_last} is integral")

    @property
    def p_last(self) -> Fraction:
        return -(sum(self.p, Fraction(0)) + self.n)

    @classmethod
    def random(cls, m: int, n: int, rng: random.Random) -> "GammaParams":
        while True:
            p = tuple(random_rat(rng) for _ in range(m))
            if all(_non_integral(v) for v in p) and _non_integral(-(sum(p) + n)):
                return cls(m, n, p)


def _poch_over_fact(p: Fraction, top: int) -> list[Fraction]:
    """Gamma(p+k) / (Gamma(p) Gamma(k+1)) = (p)_k / k! for k = 0..top."""
    return [pochhammer(p, k) / factorial(k) for k in range(top + 1)]


def theorem2_normalized_sides(params: GammaParams, x: Sequence):
    """Both gamma-weighted sides divided by prod_{j=1}^{m+1} Gamma(p_j).

    Gamma(p+1)/Gamma(p) = p and Gamma(p+k)/Gamma(p) = (p)_k, so every ratio is
    an exact rational.
    """
    m, n = params.m, params.n
    if len(x) != m:
        raise PreconditionError("x must have m entries")
    x = [Fraction(v) for v in x]
    p, p_last = params.p, params.p_last
    w = [_poch_over_fact(pj, n) for pj in p]
    w_last = _poch_over_fact(p_last, n)

    bx = [_bern_table(xj, n) for xj in x]
    total = Fraction(0)
    for k in compositions(n, m):
        t = Fraction(1)
        for j in range(m):
            t *= w[j][k[j]] * bx[j][k[j]]
        total += t
    lhs = p_last * total

    rhs = Fraction(0)
    for i in range(m):
        own = _bern_table(1 - x[i], n)
        shifted = {j: _bern_table(x[j] - x[i] + indicator(j, i), n) for j in range(m) if j != i}
        inner = Fraction(0)
        for k in compositions(n, m):
            t = w_last[k[i]] * own[k[i]]
            for j in range(m):
                if j != i:
                    t *= w[j][k[j]] * shifted[j][k[j]]
            inner += t
        rhs -= p[i] * inner
    return lhs, rhs


def verify_theorem2(params: GammaParams, x: Sequence, seed: int | None = None) -> IdentityReport:
    """Exact check of the normalized gamma identity, plus the theorem1 cross-oracle.

    With r_j = -p_j one has r_{m+1} = -p_{m+1} and (p)_k/k! = (-1)^k C(-p, k),
    so each normalized side equals (-1)^(n+1) times the matching theorem1 side.
    """
    with stopwatch() as sw:
        lhs, rhs = theorem2_normalized_sides(params, x)
        t1 = Theorem1Params(params.m, params.n, tuple(-v for v in params.p), tuple(x))
        l1, r1 = theorem1_sides(t1)
        sign = -1 if params.n % 2 == 0 else 1
        cross_ok = lhs == sign * l1 and rhs == sign * r1
    rep = _exact_report(
        "theorem2",
        {"m": params.m, "n": params.n, "p": _fmt_list(params.p), "x": _fmt_list(x), **({"seed": seed} if seed is not None else {})},
        lhs,
        rhs,
        sw[0],
        detail={"cross_oracle": cross_ok},
    )
    rep.parameters["cross_oracle"] = "agree" if cross_ok else "disagree"
    if not cross_ok:
        rep.passed = False
        rep.difference = f"cross-oracle mismatch: theorem1 sides ({l1}, {r1})"
    return rep


# --- Gamma extension of Miki's identity (bigfloat) ---------------------------


def gamma_miki_sides(p: Fraction, n: int, precision_bits: int, literal: bool = False):
    """Both sides of the one-parameter gamma extension of Miki's identity.

    lhs = 1/Gamma(2p+2n) sum_{k=1}^{n-1} B_{2k} B_{2n-2k} Gamma(p+2k) Gamma(p+2n-2k) / ((2k)! (2n-2k)!)
    rhs = 2 Gamma(p+1) sum_{k=1}^{n} B_{2k} B_{2n-2k} / ((2k)! (2n-2k)!) Gamma(p+2k) / Gamma(2p+2k+1)
          + 2 B_{2n}/(2n)! sum_{k=1}^{2n-1} Beta(p+k, p+1)

    ``literal=True`` keeps the extra Gamma(2p+2n-1) factor inside the first
    right-hand sum as typeset; that version does not balance.
    """
    p = Fraction(p)
    if n < 2:
        raise PreconditionError("gamma-Miki check needs n >= 2")
    if precision_bits < 128:
        raise PreconditionError("precision_bits must be >= 128")
    args = [p + 1, 2 * p + 2 * n, 2 * p + 2 * n - 1]
    args += [p + 2 * k for k in range(1, n + 1)] + [2 * p + 2 * k + 1 for k in range(1, n + 1)]
    args += [p + k for k in range(1, 2 * n)] + [2 * p + k + 1 for k in range(1, 2 * n)]
    for a in args:
        if a.denominator == 1 and a <= 0:
            raise GammaPole(f"Gamma argument {a} is a pole (p = {p})")

    wp = precision_bits + 32
    G = lambda z: gamma_spouge(z, wp)  # noqa: E731
    Bf = lambda k: to_bigfloat(bernoulli_number(k), wp)  # noqa: E731

    with mpmath.workprec(wp):
        lhs = mpmath.mpf(0)
        for k in range(1, n):
            lhs += (
                Bf(2 * k) * Bf(2 * n - 2 * k) * G(p + 2 * k) * G(p + 2 * n - 2 * k)
                / (factorial(2 * k) * factorial(2 * n - 2 * k))
            )
        lhs /= G(2 * p + 2 * n)

        first = mpmath.mpf(0)
        extra = G(2 * p + 2 * n - 1) if literal else 1
        for k in range(1, n + 1):
            first += (
                Bf(2 * k) * Bf(2 * n - 2 * k) / (factorial(2 * k) * factorial(2 * n - 2 * k))
                * G(p + 2 * k) * extra / G(2 * p + 2 * k + 1)
            )
        first *= 2 * G(p + 1)
        betas = mpmath.mpf(0)
        for k in range(1, 2 * n):
            betas += beta_fn(p + k, p + 1, wp)
        rhs = first + 2 * Bf(2 * n) / factorial(2 * n) * betas
    return lhs, rhs


def verify_gamma_miki(p, n: int, precision_bits: int = 256, literal: bool = False) -> IdentityReport:
    p = Fraction(p)
    if p.denominator == 1:
        if p <= 0:
            raise GammaPole(f"Gamma(p + 1) has a pole at p = {p}")
        raise PreconditionError("p must be non-integral")
    with stopwatch() as sw:
        lhs, rhs = gamma_miki_sides(p, n, precision_bits, literal)
        with mpmath.workprec(precision_bits + 32):
            scale = max(abs(lhs), abs(rhs))
            rel = abs(lhs - rhs) / scale if scale else mpmath.mpf(0)
            tol = mpmath.ldexp(1, -(precision_bits // 2))
            ok = rel < tol
    digits = int(precision_bits * 0.30103)
    params = {"p": p, "n": n, "precision_bits": precision_bits}
    if literal:
        params["reading"] = "literal"
    return IdentityReport(
        identity_id="gamma-miki",
        mode="bigfloat",
        parameters={k: str(v) for k, v in params.items()},
        lhs=mpmath.nstr(lhs, digits),
        rhs=mpmath.nstr(rhs, digits),
        difference=mpmath.nstr(rel, 6),
        passed=bool(ok),
        elapsed=sw[0],
        detail={"relative_difference": rel, "tolerance": tol},
    )
