"""Exact polynomial rings over the rationals.

``UniPoly`` is a dense univariate polynomial (coefficient index = degree) used
for Bernoulli polynomials and Woodcock's A_{m,n}(x).  ``MultiPoly`` is a sparse
multivariate polynomial keyed by exponent vectors; it is what the identity
verifiers use when parameters are left as indeterminates.

Both types are immutable after construction and mix freely with ``int`` and
``Fraction`` scalars in arithmetic.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = [
    "UniPoly",
    "MultiPoly",
    "ArityError",
    "NotDivisible",
    "poly_arith",
    "substitute",
    "divide_exact",
    "derivative",
]

Scalar = (int, Fraction)


class ArityError(ValueError):
    """Binary operation on polynomials living in rings of different arity."""


class NotDivisible(ArithmeticError):
    """Raised by :func:`divide_exact` when no exact quotient exists."""


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return str(self.lift(1, 0, names=("x",)))

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, Scalar):
            return self.coeffs == UniPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, Scalar):
            return UniPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UniPoly(p + q for p, q in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return UniPoly(c * other for c in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        acc = UniPoly((1,))
        for _ in range(e):
            acc = acc * self
        return acc

    def __call__(self, x):
        """Horner evaluation; ``x`` may be any ring element (Fraction, MultiPoly, UniPoly)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        out = self(inner)
        return out if isinstance(out, UniPoly) else UniPoly((out,))

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def lift(self, arity: int, var: int, names: Sequence[str] | None = None) -> "MultiPoly":
        """Embed into the ``arity``-variable ring as a polynomial in variable ``var``."""
        if not 0 <= var < arity:
            raise IndexError(f"variable index {var} out of range for arity {arity}")
        terms = {}
        for i, c in enumerate(self.coeffs):
            if c:
                e = [0] * arity
                e[var] = i
                terms[tuple(e)] = c
        return MultiPoly(arity, terms, names)


def _order_key(e: tuple[int, ...]):
    return (sum(e), e)


class MultiPoly:
    """Sparse polynomial in ``arity`` variables with rational coefficients."""

    __slots__ = ("arity", "terms", "names")

    def __init__(
        self,
        arity: int,
        terms: Mapping[tuple[int, ...], object] | None = None,
        names: Sequence[str] | None = None,
    ):
        self.arity = arity
        clean: dict[tuple[int, ...], Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != arity:
                raise ArityError(f"exponent vector {e} does not have length {arity}")
            c = _frac(c)
            if c:
                clean[e] = c
        self.terms = clean
        if names is not None and len(names) != arity:
            raise ValueError("names must match arity")
        self.names = tuple(names) if names is not None else None

    @classmethod
    def _raw(cls, arity, terms, names):
        obj = cls.__new__(cls)
        obj.arity = arity
        obj.terms = terms
        obj.names = names
        return obj

    @classmethod
    def constant(cls, arity: int, c=0, names=None) -> "MultiPoly":
        return cls(arity, {(0,) * arity: c}, names)

    @classmethod
    def variable(cls, arity: int, i: int, names=None) -> "MultiPoly":
        if not 0 <= i < arity:
            raise IndexError(f"variable index {i} out of range for arity {arity}")
        e = [0] * arity
        e[i] = 1
        return cls(arity, {tuple(e): 1}, names)

    @classmethod
    def variables(cls, names: Sequence[str]) -> tuple["MultiPoly", ...]:
        names = tuple(names)
        return tuple(cls.variable(len(names), i, names) for i in range(len(names)))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def leading(self) -> tuple[tuple[int, ...], Fraction]:
        e = max(self.terms, key=_order_key)
        return e, self.terms[e]

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.arity != self.arity:
                raise ArityError(f"arity mismatch: {self.arity} vs {other.arity}")
            return other
        if isinstance(other, Scalar):
            return MultiPoly.constant(self.arity, other, self.names)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.arity == other.arity and self.terms == other.terms
        if isinstance(other, Scalar):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * self.arity: Fraction(other)}
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.arity, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.arity, out, self.names or other.names)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.arity, {e: -c for e, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Scalar):
            if not other:
                return MultiPoly._raw(self.arity, {}, self.names)
            return MultiPoly._raw(self.arity, {e: c * other for e, c in self.terms.items()}, self.names)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.arity, {e: c for e, c in out.items() if c}, self.names or other.names)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Scalar):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        acc = MultiPoly.constant(self.arity, 1, self.names)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            e >>= 1
            if e:
                base = base * base
        return acc

    def substitute(self, var: int, replacement) -> "MultiPoly":
        """Replace variable ``var`` by ``replacement`` (a MultiPoly of equal arity or a scalar)."""
        if not 0 <= var < self.arity:
            raise IndexError(f"variable index {var} out of range for arity {self.arity}")
        rep = self._coerce(replacement)
        by_power: dict[int, dict] = {}
        for e, c in self.terms.items():
            rest = e[:var] + (0,) + e[var + 1:]
            by_power.setdefault(e[var], {})[rest] = c
        out = MultiPoly._raw(self.arity, {}, self.names)
        powers = {0: MultiPoly.constant(self.arity, 1, self.names)}
        for k in sorted(by_power):
            if k not in powers:
                powers[k] = rep ** k
            out = out + MultiPoly._raw(self.arity, by_power[k], self.names) * powers[k]
        return out

    def derivative(self, var: int) -> "MultiPoly":
        if not 0 <= var < self.arity:
            raise IndexError(f"variable index {var} out of range for arity {self.arity}")
        out = {}
        for e, c in self.terms.items():
            k = e[var]
            if k:
                out[e[:var] + (k - 1,) + e[var + 1:]] = c * k
        return MultiPoly._raw(self.arity, out, self.names)

    def divide_exact(self, divisor: "MultiPoly") -> "MultiPoly":
        """Quotient h with self == divisor * h, by reduction under degree-then-lex order.

        With a single divisor the reduction is exact iff the remainder vanishes, and
        the remainder is nonzero as soon as a leading term is not divisible.
        """
        q = self._coerce(divisor)
        if q.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e, lead_c = q.leading()
        rem = self
        quot: dict[tuple[int, ...], Fraction] = {}
        while not rem.is_zero():
            e, c = rem.leading()
            if any(a < b for a, b in zip(e, lead_e)):
                raise NotDivisible(f"{self} is not divisible by {q}")
            shift = tuple(a - b for a, b in zip(e, lead_e))
            coef = c / lead_c
            quot[shift] = coef
            rem = rem - q * MultiPoly._raw(self.arity, {shift: coef}, self.names)
        return MultiPoly._raw(self.arity, quot, self.names or q.names)

    def evaluate(self, values: Sequence) -> Fraction:
        """Evaluate at a point (one scalar per variable)."""
        if len(values) != self.arity:
            raise ArityError("point dimension does not match arity")
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(values, e):
                if k:
                    t *= _frac(v) ** k
            total += t
        return total

    def to_unipoly(self) -> UniPoly:
        if self.arity != 1:
            raise ArityError("only arity-1 polynomials convert to UniPoly")
        deg = self.total_degree
        return UniPoly(self.terms.get((i,), 0) for i in range(deg + 1))

    def variable_name(self) -> str | None:
        """Name of the variable if this polynomial is a bare generator, else None."""
        if len(self.terms) != 1:
            return None
        (e, c), = self.terms.items()
        if c != 1 or sum(e) != 1:
            return None
        return self._var_names()[e.index(1)]

    def _var_names(self) -> tuple[str, ...]:
        return self.names or tuple(f"x{i + 1}" for i in range(self.arity))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self._var_names()
        parts = []
        for e in sorted(self.terms, key=_order_key, reverse=True):
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            c = self.terms[e]
            parts.append(f"{c} * {mono}" if mono else str(c))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self.arity}, {str(self)!r})"


def poly_arith(op: str, a: MultiPoly, b=None) -> MultiPoly:
    """Dispatch ``add``/``mul``/``neg``/``scale`` on MultiPoly operands."""
    if op == "add":
        return a + a._coerce(b)
    if op == "mul":
        return a * a._coerce(b)
    if op == "neg":
        return -a
    if op == "scale":
        if not isinstance(b, Scalar):
            raise TypeError("scale expects a rational scalar")
        return a * b
    raise ValueError(f"unknown op {op!r}")


def substitute(p: MultiPoly, var: int, replacement) -> MultiPoly:
    return p.substitute(var, replacement)


def divide_exact(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p.divide_exact(q)


def derivative(p: MultiPoly, var: int) -> MultiPoly:
    return p.derivative(var)
