"""Exact sparse multivariate polynomials over Q and an unreduced fraction field.

Coefficients are :class:`fractions.Fraction` values; integral coefficients are
kept as plain ``int`` internally because integer arithmetic is much faster and
compares/hashes equal to the corresponding ``Fraction``.

Monomials are exponent tuples.  Terms are traversed in graded lexicographic
order, highest first, which is also the order used for exact division.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from functools import reduce
from numbers import Rational as _RationalABC
from operator import add
from typing import Iterable, Mapping, Sequence

from .errors import NotDivisible

Rational = Fraction
Monomial = tuple  # tuple[int, ...] of length nvars

# degree of the zero polynomial
NEG_INF = float("-inf")


def as_rational(c):
    """Coerce an exact scalar, keeping integers as ``int``."""
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, _RationalABC):
        return as_rational(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return as_rational(Fraction(c))
    raise TypeError(f"inexact or unsupported coefficient {c!r}")


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
    return as_rational(Fraction(a) / b)


def grlex_key(m: Monomial):
    """Sort key: larger key means larger in graded lex order."""
    return (sum(m), m)


def _heap_key(m: Monomial):
    return (-sum(m), tuple(-e for e in m))


class Polynomial:
    """Immutable sparse polynomial in ``x1..x{nvars}`` with rational coefficients."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        clean = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} has arity {len(mono)}, expected {nvars}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            coeff = as_rational(coeff)
            if coeff:
                clean[mono] = coeff
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Polynomial":
        # trusted constructor: terms already canonical and owned by the result
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # constructors
    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        c = as_rational(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        """The variable ``x_i`` (1-based)."""
        if not 1 <= i <= nvars:
            raise IndexError(f"variable index {i} out of range 1..{nvars}")
        mono = [0] * nvars
        mono[i - 1] = 1
        return cls._raw(nvars, {tuple(mono): 1})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff=1) -> "Polynomial":
        return cls(len(exponents), {tuple(exponents): coeff})

    @classmethod
    def linear(cls, coeffs: Sequence[int]) -> "Polynomial":
        """The linear form ``sum coeffs[i] * x_{i+1}``."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                mono = [0] * n
                mono[i] = 1
                terms[tuple(mono)] = as_rational(c)
        return cls._raw(n, terms)

    # inspection
    def terms(self) -> list[tuple[Monomial, object]]:
        """(monomial, coefficient) pairs in descending graded lex order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def coefficient(self, mono: Sequence[int]):
        return self._terms.get(tuple(mono), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and sum(next(iter(self._terms))) == 0)

    @property
    def degree(self):
        """Total degree; ``NEG_INF`` for the zero polynomial."""
        if not self._terms:
            return NEG_INF
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def homogeneous_component(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.nvars, {m: c for m, c in self._terms.items() if sum(m) == d})

    def leading_term(self) -> tuple[Monomial, object]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=grlex_key)
        return m, self._terms[m]

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    # arithmetic
    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        try:
            return Polynomial.constant(self.nvars, other)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = as_rational(s) if isinstance(s, Fraction) else s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "Polynomial":
        c = as_rational(c)
        if not c:
            return Polynomial.zero(self.nvars)
        if c == 1:
            return self
        out = {}
        for m, v in self._terms.items():
            v = v * c
            out[m] = as_rational(v) if isinstance(v, Fraction) else v
        return Polynomial._raw(self.nvars, out)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(map(add, ma, mb))
                out[m] = get(m, 0) + ca * cb
        return Polynomial._raw(self.nvars, _clean(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        """Exact division by a scalar or by a polynomial factor."""
        if isinstance(other, Polynomial):
            return exact_divide(self, other)
        c = as_rational(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return self.scale(Fraction(1) / c)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        try:
            c = as_rational(other)
        except TypeError:
            return NotImplemented
        return self._terms == ({(0,) * self.nvars: c} if c else {})

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # evaluation and substitution
    def __call__(self, *point):
        return poly_eval(self, point)

    def map_monomials(self, fn) -> "Polynomial":
        """Apply ``fn(mono) -> (new_mono, factor)`` termwise and collect."""
        out: dict = {}
        get = out.get
        for m, c in self._terms.items():
            nm, f = fn(m)
            out[nm] = get(nm, 0) + (c if f == 1 else c * f)
        return Polynomial._raw(self.nvars, _clean(out))

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self})"

    def __str__(self):
        from .expr import format_polynomial

        return format_polynomial(self)


def _clean(d: dict) -> dict:
    return {m: (as_rational(c) if isinstance(c, Fraction) else c) for m, c in d.items() if c}


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    return p * q


def poly_prod(factors: Iterable[Polynomial], nvars: int) -> Polynomial:
    return reduce(poly_mul, factors, Polynomial.one(nvars))


def poly_eval(p: Polynomial, point: Sequence) -> object:
    if len(point) != p.nvars:
        raise ValueError(f"point has length {len(point)}, expected {p.nvars}")
    point = [as_rational(v) for v in point]
    total = 0
    for m, c in p._terms.items():
        t = c
        for v, e in zip(point, m):
            if e:
                t = t * v**e
        total += t
    return as_rational(total) if isinstance(total, Fraction) else total


def exact_divide(p: Polynomial, d: Polynomial) -> Polynomial:
    """Return ``q`` with ``p == q * d``, or raise :class:`NotDivisible`.

    Multivariate division by the graded lex leading term of ``d``.  When ``p``
    is a multiple of ``d`` every intermediate remainder is too, so its leading
    term is always divisible by ``LT(d)``; the first time it is not, ``p`` is
    not a multiple.
    """
    p._check(d)
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    n = p.nvars
    if p.is_zero():
        return Polynomial.zero(n)
    lm_d, lc_d = d.leading_term()
    if len(d) == 1:
        out = {}
        for m, c in p._terms.items():
            qm = tuple(a - b for a, b in zip(m, lm_d))
            if min(qm, default=0) < 0:
                raise NotDivisible(f"{d} does not divide {p}", dividend=p, divisor=d)
            out[qm] = _div(c, lc_d)
        return Polynomial._raw(n, out)

    rest = [(m, c) for m, c in d._terms.items() if m != lm_d]
    rem = dict(p._terms)
    heap = [(_heap_key(m), m) for m in rem]
    heapq.heapify(heap)
    quot = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = rem.pop(m, None)
        if c is None:
            continue
        qm = tuple(a - b for a, b in zip(m, lm_d))
        if min(qm) < 0:
            raise NotDivisible(f"{d} does not divide {p}", dividend=p, divisor=d)
        qc = _div(c, lc_d)
        quot[qm] = qc
        for dm, dc in rest:
            mm = tuple(map(add, qm, dm))
            old = rem.get(mm)
            new = (0 if old is None else old) - qc * dc
            if new:
                rem[mm] = as_rational(new) if isinstance(new, Fraction) else new
                if old is None:
                    heapq.heappush(heap, (_heap_key(mm), mm))
            elif old is not None:
                del rem[mm]
    return Polynomial._raw(n, quot)


def divides(d: Polynomial, p: Polynomial) -> bool:
    try:
        exact_divide(p, d)
    except NotDivisible:
        return False
    return True


class RationalFunction:
    """Unreduced fraction ``numerator / denominator`` of polynomials.

    The denominator is kept as a tuple of factors whose product is the
    denominator; no gcd is ever taken.  ``==`` compares by
    cross-multiplication.
    """

    __slots__ = ("numerator", "factors", "_den")

    def __init__(self, numerator: Polynomial, denominator: Polynomial | Sequence[Polynomial] | None = None):
        n = numerator.nvars
        if denominator is None:
            factors = ()
        elif isinstance(denominator, Polynomial):
            factors = (denominator,)
        else:
            factors = tuple(denominator)
        for f in factors:
            numerator._check(f)
            if f.is_zero():
                raise ZeroDivisionError("zero denominator")
        self.numerator = numerator
        self.factors = tuple(f for f in factors if f != 1)
        self._den = None if self.factors else Polynomial.one(n)

    @property
    def nvars(self) -> int:
        return self.numerator.nvars

    @property
    def denominator(self) -> Polynomial:
        if self._den is None:
            self._den = poly_prod(self.factors, self.nvars)
        return self._den

    def __add__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return frac_add(self, other)

    def __neg__(self):
        return RationalFunction(-self.numerator, self.factors)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        self.numerator._check(other.numerator)
        return self.numerator * other.denominator == other.numerator * self.denominator

    __hash__ = None

    def __repr__(self):
        if not self.factors:
            return f"RationalFunction({self.numerator})"
        den = " * ".join(f"({f})" for f in self.factors)
        return f"RationalFunction(({self.numerator}) / ({den}))"


def frac_add(f: RationalFunction, g: RationalFunction) -> RationalFunction:
    f.numerator._check(g.numerator)
    num = f.numerator * g.denominator + g.numerator * f.denominator
    return RationalFunction(num, f.factors + g.factors)


def frac_to_polynomial(f: RationalFunction) -> Polynomial:
    """Certify that ``f`` is a polynomial and return it.

    Divides by the stored denominator factors one at a time, which is exact
    at every step iff it is exact for the full product.
    """
    q = f.numerator
    for factor in f.factors:
        try:
            q = exact_divide(q, factor)
        except NotDivisible as exc:
            raise NotDivisible("sum is not polynomial", dividend=f.numerator,
                               divisor=f.denominator, fraction=f) from exc
    return q
