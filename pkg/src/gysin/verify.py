"""Self-check suite run by ``gysin check``: oracle identities and structural laws."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .arith import Polynomial
from .errors import NotDivisible, ParseError
from .expr import format_polynomial, parse
from .pushforward import (
    BundleSpec,
    Convention,
    gysin_pushforward,
    jacobi_symmetrize,
    lagrange_sylvester,
    pushforward_via_factorization,
)
from .schubert import (
    complete_homogeneous,
    jacobi_via_divided_differences,
    partitions,
    schur_bialternant,
)
from .weyl import (
    Composition,
    GroupSpec,
    act,
    coset_reps,
    enumerate_group,
    is_invariant,
    length,
    parabolic_subgroup,
    sign,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.cases} cases, {self.seconds:.2f}s"
        if self.failures:
            text += " -- " + "; ".join(self.failures[:3])
        return text

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases,
                "failures": self.failures, "seconds": round(self.seconds, 3)}


def random_polynomial(rng: random.Random, n: int, degree: int, nterms: int = 4,
                      homogeneous: bool = True, coeff_bound: int = 5,
                      rational: bool = False) -> Polynomial:
    terms = {}
    for _ in range(nterms):
        d = degree if homogeneous else rng.randint(0, degree)
        mono = [0] * n
        for _ in range(d):
            mono[rng.randrange(n)] += 1
        c = rng.randint(-coeff_bound, coeff_bound)
        if rational:
            c = Fraction(c, rng.randint(1, 4))
        terms[tuple(mono)] = c
    return Polynomial(n, terms)


def symmetrize(b: Polynomial, group: GroupSpec, comp: Composition) -> Polynomial:
    """Sum of ``h.b`` over ``W_H``; always ``W_H``-invariant."""
    total = Polynomial.zero(b.nvars)
    for h in parabolic_subgroup(group, comp):
        total = total + act(h, b)
    return total


def _compositions(n: int):
    # all ordered compositions of n
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


@dataclass
class CorpusCase:
    bundle: BundleSpec
    b: Polynomial

    @property
    def label(self) -> str:
        g = self.bundle.group
        return f"{g.family}{g.rank}({self.bundle.comp}) b={self.b}"


def random_corpus(rng: random.Random, max_n: int = 4, max_degree: int = 6,
                  count: int = 60) -> list[CorpusCase]:
    """Homogeneous ``W_H``-invariant inputs over assorted bundles.

    Degrees are drawn so that roughly half the cases lie at or above the fiber
    dimension (nonzero output possible) and half below it.
    """
    bundles = []
    for n in range(1, max_n + 1):
        for parts in _compositions(n):
            bundles.append(BundleSpec(GroupSpec("A", n), Composition(parts)))
        if n <= 3:
            for fam in ("B", "C"):
                bundles.append(BundleSpec.full_flag(fam, n))
                if n >= 2:
                    bundles.append(BundleSpec(GroupSpec(fam, n), Composition.whole(n)))
    cases = []
    for i in range(count):
        bundle = bundles[i % len(bundles)]
        m = bundle.fiber_dimension
        if rng.random() < 0.5 and m <= max_degree:
            degree = rng.randint(m, max_degree)
        else:
            degree = rng.randint(0, max_degree)
        b = random_polynomial(rng, bundle.n, degree, nterms=rng.randint(1, 3))
        if not bundle.comp.is_torus():
            b = symmetrize(b, bundle.group, bundle.comp)
        cases.append(CorpusCase(bundle, b))
    return cases


def _run(name: str, body: Callable[[CheckResult], None]) -> CheckResult:
    result = CheckResult(name, True)
    start = time.perf_counter()
    try:
        body(result)
    except Exception as exc:  # report, never crash the suite
        result.failures.append(f"{type(exc).__name__}: {exc}")
    result.seconds = time.perf_counter() - start
    result.passed = not result.failures
    return result


def _sign_for(convention, m: int) -> int:
    return (-1) ** m if Convention(convention) is Convention.SYM else 1


def check_schur(max_n: int, max_size: int, convention=Convention.PROP) -> CheckResult:
    def body(r):
        for n in range(2, max_n + 1):
            delta = [n - 1 - i for i in range(n)]
            eps = _sign_for(convention, n * (n - 1) // 2)
            for size in range(max_size + 1):
                for lam in partitions(size, n):
                    exps = [a + d for a, d in zip(lam.padded(n), delta)]
                    got = jacobi_symmetrize(Polynomial.monomial(exps), n, convention)
                    r.cases += 1
                    if got != schur_bialternant(lam, n) * eps:
                        r.failures.append(f"n={n} lambda={lam.parts}: {got}")

    return _run("schur identity", body)


def check_segre(ns, jmax: int, convention=Convention.PROP) -> CheckResult:
    def body(r):
        for n in ns:
            eps = _sign_for(convention, n - 1)
            for j in range(jmax + 1):
                b = Polynomial.variable(n, 1) ** (n - 1 + j)
                got = lagrange_sylvester(b, n, 1, convention)
                r.cases += 1
                if got != complete_homogeneous(j, n) * eps:
                    r.failures.append(f"n={n} j={j}: {got}")

    return _run("segre identity", body)


def check_two_forms(rng, count: int, max_n: int, max_degree: int,
                    convention=Convention.PROP) -> CheckResult:
    def body(r):
        for _ in range(count):
            n = rng.randint(1, max_n)
            b = random_polynomial(rng, n, max_degree, nterms=rng.randint(1, 5), homogeneous=False)
            bundle = BundleSpec.full_flag("A", n, convention)
            a = gysin_pushforward(b, bundle, method="localize")
            c = gysin_pushforward(b, bundle, method="closed")
            r.cases += 1
            if a != c:
                r.failures.append(f"n={n} b={b}")

    return _run("two-form agreement", body)


def check_corpus(corpus: list[CorpusCase], convention=Convention.PROP) -> list[CheckResult]:
    outputs = {}

    def polynomiality(r):
        for i, case in enumerate(corpus):
            bundle = case.bundle.with_convention(convention)
            r.cases += 1
            try:
                out = gysin_pushforward(case.b, bundle, method="localize")
            except NotDivisible as exc:
                r.failures.append(f"{case.label}: {exc}")
                continue
            outputs[i] = out
            if not is_invariant(out, bundle.group):
                r.failures.append(f"{case.label}: output {out} not W-invariant")

    def degree_law(r):
        for i, case in enumerate(corpus):
            if i not in outputs:
                continue
            out, m = outputs[i], case.bundle.fiber_dimension
            r.cases += 1
            if case.b.degree < m and not out.is_zero():
                r.failures.append(f"{case.label}: expected 0, got {out}")
            elif not out.is_zero() and out.degree != case.b.degree - m:
                r.failures.append(f"{case.label}: degree {out.degree}")

    def relation(r):
        other = Convention.SYM if Convention(convention) is Convention.PROP else Convention.PROP
        for i, case in enumerate(corpus):
            if i not in outputs:
                continue
            r.cases += 1
            alt = gysin_pushforward(case.b, case.bundle.with_convention(other))
            if outputs[i] != alt * (-1) ** case.bundle.fiber_dimension:
                r.failures.append(case.label)

    return [_run("polynomiality and invariance", polynomiality),
            _run("degree law", degree_law),
            _run("convention relation", relation)]


def check_functoriality(rng, count: int, max_n: int, convention=Convention.PROP) -> CheckResult:
    def body(r):
        for _ in range(count):
            n = rng.randint(2, max_n)
            k = rng.randint(1, n - 1)
            m = n * (n - 1) // 2
            b = random_polynomial(rng, n, m + rng.randint(-1, 2), nterms=rng.randint(1, 3))
            r.cases += 1
            if jacobi_symmetrize(b, n, convention) != pushforward_via_factorization(b, n, k, convention):
                r.failures.append(f"n={n} k={k} b={b}")

    return _run("functoriality", body)


def check_divided_differences(rng, count: int, max_n: int) -> CheckResult:
    def body(r):
        for _ in range(count):
            n = rng.randint(1, max_n)
            m = n * (n - 1) // 2
            b = random_polynomial(rng, n, m + rng.randint(0, 2), nterms=rng.randint(1, 4),
                                  homogeneous=False, rational=True)
            r.cases += 1
            if jacobi_via_divided_differences(b, n) != jacobi_symmetrize(b, n):
                r.failures.append(f"n={n} b={b}")

    return _run("divided-difference oracle", body)


def _det(m):
    # Leibniz-free integer determinant by cofactor expansion
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _det([row[:j] + row[j + 1:] for row in m[1:]])
               for j in range(len(m)) if m[0][j])


def check_weyl(max_a: int, max_b: int) -> CheckResult:
    def body(r):
        for fam, top in (("A", max_a), ("B", max_b), ("C", max_b)):
            for n in range(1, top + 1):
                spec = GroupSpec(fam, n)
                elems = enumerate_group(spec)
                expected = math.factorial(n) * (1 if fam == "A" else 2**n)
                r.cases += 1
                if len(elems) != expected or len(set(elems)) != expected:
                    r.failures.append(f"|W({fam}{n})| = {len(elems)}")
                for w in elems:
                    if (-1) ** length(w, spec) != sign(w, spec) or sign(w, spec) != _det(w.matrix()):
                        r.failures.append(f"sign mismatch for {w}")
            if fam == "A":
                for n in range(1, top + 1):
                    for parts in _compositions(n):
                        comp = Composition(parts)
                        expected = math.factorial(n) // math.prod(math.factorial(k) for k in parts)
                        r.cases += 1
                        if len(coset_reps(GroupSpec("A", n), comp)) != expected:
                            r.failures.append(f"coset count for {parts}")

    return _run("weyl group structure", body)


def check_parser(rng, count: int) -> CheckResult:
    def body(r):
        for _ in range(count):
            n = rng.randint(1, 5)
            p = random_polynomial(rng, n, rng.randint(0, 6), nterms=rng.randint(0, 6),
                                  homogeneous=False, rational=True)
            alphabet = rng.choice("xua")
            r.cases += 1
            if parse(format_polynomial(p, alphabet), n) != p:
                r.failures.append(f"round trip failed for {p}")
        for text, nvars in (("x1 +* x2", 2), ("x0", 2), ("x1^99999999999", 1)):
            r.cases += 1
            try:
                parse(text, nvars)
            except ParseError as exc:
                if exc.line < 1 or exc.column < 1:
                    r.failures.append(f"{text!r}: bad position")
            else:
                r.failures.append(f"{text!r} parsed without error")

    return _run("parser round trip", body)


def run_all(max_n: int = 4, max_degree: int = 6, convention=Convention.PROP,
            seed: int = 0, samples: int = 50) -> list[CheckResult]:
    rng = random.Random(seed)
    results = [
        check_schur(max_n, max_degree, convention),
        check_segre(range(2, max(max_n, 2) + 2), 4, convention),
        check_two_forms(rng, samples, max_n, max_degree, convention),
    ]
    results += check_corpus(random_corpus(rng, max_n, max_degree, samples), convention)
    results += [
        check_functoriality(rng, samples, max_n, convention),
        check_divided_differences(rng, samples, max_n),
        check_weyl(min(max_n + 2, 6), max_n),
        check_parser(rng, 4 * samples),
    ]
    return results
