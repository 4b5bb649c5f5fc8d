"""Classical oracles for checking the symmetrizers.

Nothing here goes through the Weyl-group code: determinants are expanded by
cofactors and the transposition ``s_i`` is a direct exponent swap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .arith import Polynomial, exact_divide

__all__ = [
    "Partition",
    "SegreReport",
    "complete_homogeneous",
    "determinant",
    "divided_difference",
    "elementary_symmetric",
    "jacobi_via_divided_differences",
    "longest_word",
    "partitions",
    "schur_bialternant",
    "segre_check",
    "vandermonde",
]


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(s) for s in text.split(",")))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return sum(1 for p in self.parts if p)

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"partition {self.parts} has more than {n} parts")
        nonzero = [p for p in self.parts if p]
        return tuple(nonzero) + (0,) * (n - len(nonzero))


def partitions(size: int, max_parts: int):
    """All partitions of ``size`` with at most ``max_parts`` parts."""

    def gen(remaining, largest, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first, slots - 1):
                yield (first,) + rest

    for parts in gen(size, size, max_parts):
        yield Partition(parts)


def determinant(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Cofactor expansion along the first row, memoized on the remaining columns."""
    size = len(matrix)
    if size == 0:
        raise ValueError("empty matrix")
    nvars = matrix[0][0].nvars

    @lru_cache(maxsize=None)
    def minor(row: int, cols: tuple[int, ...]) -> Polynomial:
        if row == size:
            return Polynomial.one(nvars)
        total = Polynomial.zero(nvars)
        for pos, c in enumerate(cols):
            entry = matrix[row][c]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            term = entry * sub
            total = total + term if pos % 2 == 0 else total - term
        return total

    return minor(0, tuple(range(size)))


def _power_matrix(exponents: Sequence[int], n: int):
    return [[Polynomial.variable(n, i + 1) ** e for e in exponents] for i in range(n)]


def vandermonde(n: int) -> Polynomial:
    """``det(x_i^{n-j}) = prod_{i<j} (x_i - x_j)``."""
    return determinant(_power_matrix(range(n - 1, -1, -1), n))


def schur_bialternant(lam: Partition | Sequence[int], n: int) -> Polynomial:
    """``s_lambda(x_1..x_n) = det(x_i^{lambda_j + n - j}) / det(x_i^{n - j})``."""
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam))
    parts = lam.padded(n)
    alternant = determinant(_power_matrix([parts[j] + n - 1 - j for j in range(n)], n))
    return exact_divide(alternant, vandermonde(n))


def complete_homogeneous(k: int, n: int) -> Polynomial:
    if k < 0:
        raise ValueError("degree must be non-negative")
    terms = {}
    for combo in itertools.combinations_with_replacement(range(n), k):
        mono = [0] * n
        for i in combo:
            mono[i] += 1
        terms[tuple(mono)] = 1
    return Polynomial(n, terms)


def elementary_symmetric(k: int, n: int) -> Polynomial:
    if k < 0:
        raise ValueError("degree must be non-negative")
    terms = {}
    for combo in itertools.combinations(range(n), k):
        mono = [0] * n
        for i in combo:
            mono[i] = 1
        terms[tuple(mono)] = 1
    return Polynomial(n, terms)


def _swap(b: Polynomial, i: int) -> Polynomial:
    def move(m):
        m = list(m)
        m[i - 1], m[i] = m[i], m[i - 1]
        return tuple(m), 1

    return b.map_monomials(move)


def divided_difference(i: int, b: Polynomial) -> Polynomial:
    """``(b - s_i b) / (x_i - x_{i+1})``."""
    n = b.nvars
    if not 1 <= i <= n - 1:
        raise IndexError(f"divided difference index {i} out of range 1..{n - 1}")
    root = Polynomial.variable(n, i) - Polynomial.variable(n, i + 1)
    return exact_divide(b - _swap(b, i), root)


def longest_word(n: int) -> list[int]:
    """Reduced word ``s1 (s2 s1) (s3 s2 s1) ...`` of the longest permutation."""
    word = []
    for top in range(1, n):
        word.extend(range(top, 0, -1))
    return word


def jacobi_via_divided_differences(b: Polynomial, n: int) -> Polynomial:
    """``d_{w0} = d_{i_1} o ... o d_{i_l}`` along :func:`longest_word`."""
    if b.nvars != n:
        raise ValueError(f"class has {b.nvars} variables, expected {n}")
    for i in reversed(longest_word(n)):
        b = divided_difference(i, b)
    return b


@dataclass
class SegreRow:
    j: int
    computed: Polynomial
    expected: Polynomial

    @property
    def passed(self) -> bool:
        return self.computed == self.expected


@dataclass
class SegreReport:
    n: int
    rows: list[SegreRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "rows": [
                {"j": r.j, "computed": str(r.computed), "expected": str(r.expected), "passed": r.passed}
                for r in self.rows
            ],
            "passed": self.passed,
        }


def segre_check(n: int, jmax: int) -> SegreReport:
    """Check that pushing ``x1^{n-1+j}`` from the projective bundle gives ``h_j``."""
    from .pushforward import lagrange_sylvester

    if n < 2:
        raise ValueError("n must be at least 2")
    report = SegreReport(n)
    for j in range(jmax + 1):
        b = Polynomial.variable(n, 1) ** (n - 1 + j)
        report.rows.append(SegreRow(j, lagrange_sylvester(b, n, 1), complete_homogeneous(j, n)))
    return report
