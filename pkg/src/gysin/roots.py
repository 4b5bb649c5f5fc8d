"""Positive roots as integer linear forms, and Euler-class denominators.

A root is identified with its linear polynomial in ``u1..un`` (the
characteristic map is modelled as the identity on linear forms).
Type B uses short roots ``e_i``; type C long roots ``2 e_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .arith import Polynomial, poly_prod
from .errors import UnsupportedConfiguration
from .weyl import Composition, GroupSpec, _is_whole_group, check_compatible


class Convention(str, Enum):
    """Orientation of the Euler-class factors.

    ``PROP`` uses ``x_i - x_j`` for ``i < j``; ``SYM`` uses ``x_j - x_i``,
    i.e. every factor negated.
    """

    PROP = "prop"
    SYM = "sym"


@dataclass(frozen=True)
class Root:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not any(self.coeffs):
            raise ValueError("a root is a nonzero vector")

    def __neg__(self):
        return Root(tuple(-c for c in self.coeffs))


@dataclass(frozen=True)
class RootSystemData:
    spec: GroupSpec
    positive: tuple[Root, ...]

    def __len__(self):
        return len(self.positive)

    def __iter__(self):
        return iter(self.positive)


def _unit(n, i, c=1):
    v = [0] * n
    v[i] = c
    return v


def positive_roots(spec: GroupSpec) -> RootSystemData:
    n = spec.rank
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            v = _unit(n, i)
            v[j] = -1
            roots.append(Root(tuple(v)))
    if spec.family in ("B", "C"):
        for i in range(n):
            for j in range(i + 1, n):
                v = _unit(n, i)
                v[j] = 1
                roots.append(Root(tuple(v)))
        c = 1 if spec.family == "B" else 2
        roots.extend(Root(tuple(_unit(n, i, c))) for i in range(n))
    elif spec.family != "A":
        raise UnsupportedConfiguration(f"unsupported family {spec.family!r}")
    return RootSystemData(spec, tuple(roots))


def parabolic_positive_roots(spec: GroupSpec, comp: Composition) -> RootSystemData:
    """Positive roots of ``H``: those supported inside a single block."""
    check_compatible(spec, comp)
    full = positive_roots(spec)
    if spec.signed:
        return full if _is_whole_group(spec, comp) else RootSystemData(spec, ())
    block_of = {}
    for b, block in enumerate(comp.blocks()):
        for i in block:
            block_of[i] = b
    keep = []
    for r in full.positive:
        support = {block_of[i] for i, c in enumerate(r.coeffs) if c}
        if len(support) == 1:
            keep.append(r)
    return RootSystemData(spec, tuple(keep))


def root_to_linear(alpha: Root | Sequence[int]) -> Polynomial:
    coeffs = alpha.coeffs if isinstance(alpha, Root) else tuple(alpha)
    return Polynomial.linear(coeffs)


def complement_roots(delta: RootSystemData, parabolic: RootSystemData) -> tuple[Root, ...]:
    inner = set(parabolic.positive)
    if not inner <= set(delta.positive):
        raise ValueError("parabolic roots are not contained in the positive roots")
    return tuple(r for r in delta.positive if r not in inner)


def euler_factors(delta: RootSystemData, parabolic: RootSystemData,
                  convention: Convention | str = Convention.PROP) -> tuple[Polynomial, ...]:
    """The linear factors ``c_1(S_alpha)`` over ``Delta+ - Delta+(H)``."""
    convention = Convention(convention)
    roots = complement_roots(delta, parabolic)
    if convention is Convention.SYM:
        roots = tuple(-r for r in roots)
    return tuple(root_to_linear(r) for r in roots)


def euler_denominator(delta: RootSystemData, parabolic: RootSystemData,
                      convention: Convention | str = Convention.PROP) -> Polynomial:
    return poly_prod(euler_factors(delta, parabolic, convention), delta.spec.rank)
