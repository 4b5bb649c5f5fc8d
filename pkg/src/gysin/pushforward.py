"""Gysin pushforwards of flag bundles as Weyl-group symmetrizing operators.

For a fiber ``G/H`` the pushforward of an ``W_H``-invariant class ``b`` is the
localization sum over the torus-fixed points ``W_G/W_H``::

    sum_{w in W_G/W_H}  w.b / w.(prod_{alpha in D+ - D+(H)} alpha)

The restriction of ``b`` to the fixed point ``w`` is ``w.b`` and the Euler
class of the normal space there is ``w`` applied to the root product.  The
sum is formed over a common denominator and then certified to be a polynomial
by exact division.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .arith import Polynomial, RationalFunction, frac_to_polynomial, poly_prod
from .errors import InvarianceError, NotDivisible
from .roots import (
    Convention,
    complement_roots,
    euler_factors,
    parabolic_positive_roots,
    positive_roots,
)
from .weyl import (
    DEFAULT_CAP,
    Composition,
    GroupSpec,
    WeylElement,
    act,
    check_compatible,
    coset_reps,
    enumerate_group,
    is_invariant,
    parabolic_subgroup,
    sign,
)

__all__ = [
    "BundleSpec",
    "Convention",
    "FixedPointDatum",
    "block_jacobi",
    "box_operator",
    "closed_numerator_pushforward",
    "euler_at",
    "fixed_point_data",
    "gysin_pushforward",
    "jacobi_symmetrize",
    "lagrange_sylvester",
    "localization_sum",
    "pushforward_via_factorization",
    "restriction_at",
]


@dataclass(frozen=True)
class BundleSpec:
    """Fiber ``G/H`` of a flag bundle: group, parabolic blocks and sign convention."""

    group: GroupSpec
    comp: Composition
    convention: Convention = Convention.PROP
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        object.__setattr__(self, "convention", Convention(self.convention))
        check_compatible(self.group, self.comp)

    @classmethod
    def full_flag(cls, family: str, n: int, convention=Convention.PROP) -> "BundleSpec":
        return cls(GroupSpec(family, n), Composition.torus(n), convention)

    @classmethod
    def grassmannian(cls, n: int, k: int, convention=Convention.PROP) -> "BundleSpec":
        return cls(GroupSpec("A", n), Composition((k, n - k)), convention)

    @property
    def n(self) -> int:
        return self.group.rank

    @property
    def is_full_flag(self) -> bool:
        return self.comp.is_torus()

    def factors(self) -> tuple[Polynomial, ...]:
        return euler_factors(positive_roots(self.group),
                             parabolic_positive_roots(self.group, self.comp),
                             self.convention)

    @property
    def fiber_dimension(self) -> int:
        """``|D+ - D+(H)|``, the degree by which the pushforward lowers degree."""
        return len(complement_roots(positive_roots(self.group),
                                    parabolic_positive_roots(self.group, self.comp)))

    def with_convention(self, convention) -> "BundleSpec":
        return BundleSpec(self.group, self.comp, convention, self.cap)


@dataclass(frozen=True)
class FixedPointDatum:
    """Restriction of a class to a fixed point and the Euler class there.

    ``factors`` optionally records a factorization of ``euler``; when given,
    ``euler`` may be left out and is computed as their product (an empty
    product is 1, the fiber being a point).  Factors let
    the localization sum share denominators without any gcd computation.
    """

    restriction: Polynomial
    euler: Polynomial | None = None
    factors: tuple[Polynomial, ...] = field(default=())

    def __post_init__(self):
        factors = tuple(self.factors)
        euler = self.euler
        if euler is None:
            euler = poly_prod(factors, self.restriction.nvars)
        elif not factors:
            factors = (euler,)
        if euler.is_zero():
            raise ZeroDivisionError("Euler class must be nonzero")
        self.restriction._check(euler)
        object.__setattr__(self, "euler", euler)
        object.__setattr__(self, "factors", factors)


def _normalize(f: Polynomial) -> tuple[Polynomial, object]:
    """Split ``f = scalar * g`` with ``g`` having leading coefficient 1."""
    _, lc = f.leading_term()
    return (f if lc == 1 else f.scale(Fraction(1) / lc)), lc


def localization_sum(data: Sequence[FixedPointDatum]) -> Polynomial:
    """``sum restriction / euler`` over the fixed points, certified polynomial.

    Each Euler factor is normalized up to a scalar; the common denominator is
    the product of the distinct normalized factors at their largest
    multiplicity.  Raises :class:`NotDivisible` when the sum is not a
    polynomial.
    """
    if not data:
        raise ValueError("empty fixed-point data")
    n = data[0].restriction.nvars
    prepared = []
    common: Counter = Counter()
    for d in data:
        if d.restriction.nvars != n:
            raise ValueError("arity mismatch between fixed points")
        counts: Counter = Counter()
        scalar = 1
        for f in d.factors:
            g, c = _normalize(f)
            counts[g] += 1
            scalar = scalar * c
        prepared.append((d.restriction, counts, scalar))
        for g, k in counts.items():
            if k > common[g]:
                common[g] = k

    numerator = Polynomial.zero(n)
    for restriction, counts, scalar in prepared:
        if restriction.is_zero():
            continue
        missing = [g for g, k in common.items() for _ in range(k - counts[g])]
        term = restriction.scale(Fraction(1) / scalar)
        for g in missing:
            term = term * g
        numerator = numerator + term
    denominator = [g for g, k in common.items() for _ in range(k)]
    return frac_to_polynomial(RationalFunction(numerator, denominator))


def _check_invariant(b: Polynomial, bundle: BundleSpec) -> None:
    if b.nvars != bundle.n:
        raise ValueError(f"class has {b.nvars} variables, bundle rank is {bundle.n}")
    if not bundle.comp.is_torus() and not is_invariant(b, bundle.group, bundle.comp):
        raise InvarianceError(
            f"input is not invariant under W_H for composition ({bundle.comp})"
        )


def restriction_at(w: WeylElement, b: Polynomial, bundle: BundleSpec, *, check: bool = True) -> Polynomial:
    """Restriction of the fiber class ``b`` to the fixed point ``w``: ``w.b``."""
    if check:
        _check_invariant(b, bundle)
    return act(w, b)


def euler_at(w: WeylElement, bundle: BundleSpec) -> Polynomial:
    return poly_prod((act(w, f) for f in bundle.factors()), bundle.n)


def fixed_point_data(b: Polynomial, bundle: BundleSpec, *, check: bool = True) -> list[FixedPointDatum]:
    if check:
        _check_invariant(b, bundle)
    factors = bundle.factors()
    data = []
    for w in coset_reps(bundle.group, bundle.comp, bundle.cap):
        data.append(FixedPointDatum(act(w, b), factors=tuple(act(w, f) for f in factors)))
    return data


def closed_numerator_pushforward(b: Polynomial, bundle: BundleSpec) -> Polynomial:
    """Full-flag pushforward as ``(sum_w (-1)^w w.b) / prod_{alpha in D+} alpha``."""
    if not bundle.is_full_flag:
        raise ValueError("closed numerator form applies to the complete flag only")
    if b.nvars != bundle.n:
        raise ValueError(f"class has {b.nvars} variables, bundle rank is {bundle.n}")
    n = bundle.n
    if b.is_zero():
        return Polynomial.zero(n)
    numerator = Polynomial.zero(n)
    for w in enumerate_group(bundle.group, bundle.cap):
        term = act(w, b)
        numerator = numerator + term if sign(w, bundle.group) > 0 else numerator - term
    return frac_to_polynomial(RationalFunction(numerator, bundle.factors()))


def gysin_pushforward(b: Polynomial, bundle: BundleSpec, *, method: str = "auto",
                      check_invariance: bool = True) -> Polynomial:
    """Pushforward ``f^* f_*`` of the class ``b`` along the fiber ``G/H``.

    ``method`` is ``"localize"`` (fixed-point sum over coset representatives),
    ``"closed"`` (alternating numerator over one denominator; complete flag
    only) or ``"auto"`` (closed for complete flags, localize otherwise).
    """
    if check_invariance:
        _check_invariant(b, bundle)
    elif b.nvars != bundle.n:
        raise ValueError(f"class has {b.nvars} variables, bundle rank is {bundle.n}")
    if b.is_zero():
        return Polynomial.zero(bundle.n)
    if method == "auto":
        method = "closed" if bundle.is_full_flag else "localize"
    if method == "closed":
        return closed_numerator_pushforward(b, bundle)
    if method != "localize":
        raise ValueError(f"unknown method {method!r}")
    return localization_sum(fixed_point_data(b, bundle, check=False))


def jacobi_symmetrize(b: Polynomial, n: int, convention=Convention.PROP, *,
                      family: str = "A", method: str = "auto") -> Polynomial:
    """Complete-flag pushforward (Jacobi symmetrizer).

    With ``method="both"`` the localization sum and the closed numerator form
    are both evaluated and must agree.
    """
    bundle = BundleSpec.full_flag(family, n, convention)
    if method != "both":
        return gysin_pushforward(b, bundle, method=method)
    a = gysin_pushforward(b, bundle, method="localize")
    c = gysin_pushforward(b, bundle, method="closed")
    if a != c:
        raise NotDivisible(f"closed and localized forms disagree: {a} != {c}")
    return a


def lagrange_sylvester(b: Polynomial, n: int, k: int, convention=Convention.PROP, *,
                       check_invariance: bool = True) -> Polynomial:
    """Grassmannian pushforward: symmetrizes an ``S_k x S_{n-k}``-invariant class."""
    return gysin_pushforward(b, BundleSpec.grassmannian(n, k, convention),
                             check_invariance=check_invariance)


def box_operator(b: Polynomial, bundle: BundleSpec, *, check_invariance: bool = True) -> Polynomial:
    """Generalized symmetrizer ``W_H``-invariants -> ``W_G``-invariants."""
    return gysin_pushforward(b, bundle, check_invariance=check_invariance)


def block_jacobi(b: Polynomial, comp: Composition, convention=Convention.PROP) -> Polynomial:
    """Jacobi symmetrizer applied inside each block: the pushforward along ``H/T``."""
    n = comp.n
    group = GroupSpec("A", n)
    check_compatible(group, comp)
    inner = parabolic_positive_roots(group, comp)
    factors = euler_factors(inner, type(inner)(group, ()), convention)
    if b.is_zero():
        return Polynomial.zero(n)
    numerator = Polynomial.zero(n)
    for h in parabolic_subgroup(group, comp):
        term = act(h, b)
        numerator = numerator + term if sign(h, group) > 0 else numerator - term
    return frac_to_polynomial(RationalFunction(numerator, factors))


def pushforward_via_factorization(b: Polynomial, n: int, k: int,
                                  convention=Convention.PROP) -> Polynomial:
    """Push along ``Fl -> G(k, n)`` and then ``G(k, n) -> pt``."""
    comp = Composition((k, n - k)) if 0 < k < n else Composition((n,))
    inner = block_jacobi(b, comp, convention)
    if len(comp.parts) == 1:
        return inner
    return lagrange_sylvester(inner, n, k, convention)
