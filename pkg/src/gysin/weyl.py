"""Classical Weyl groups: symmetric groups (type A) and signed permutations (B, C).

Conventions, fixed here and used everywhere else:

* A :class:`WeylElement` is the signed permutation matrix ``diag(signs) @ P``
  where ``P`` sends the basis vector ``e_i`` to ``e_{perm[i]}``.  So
  ``w(e_i) = signs[perm[i]] * e_{perm[i]}``; ``signs`` is indexed by the
  *target* coordinate.
* The action on polynomials substitutes ``x_i -> signs[w(i)] * x_{w(i)}``,
  i.e. ``(w.b)(x_1, .., x_n) = b(x_{w(1)}, .., x_{w(n)})`` in type A.
* ``v * w`` is the composite ``v o w``; with these two choices
  ``act(v, act(w, p)) == act(v * w, p)``.

Types B and C share the group; they only differ in root data.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .arith import Polynomial
from .errors import EnumerationCapExceeded, IncompatibleComposition, UnsupportedConfiguration

FAMILIES = ("A", "B", "C")
DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class GroupSpec:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnsupportedConfiguration(f"unsupported family {self.family!r}")
        if self.rank < 1:
            raise ValueError("rank must be positive")

    @property
    def order(self) -> int:
        n = self.rank
        return math.factorial(n) if self.family == "A" else 2**n * math.factorial(n)

    @property
    def signed(self) -> bool:
        return self.family != "A"


@dataclass(frozen=True)
class Composition:
    """Block sizes ``(k_1, .., k_r)``; in type A, ``W_H = S_{k_1} x .. x S_{k_r}``.

    For types B and C only the two extremes are meaningful: all ones (H = T)
    and a single block ``(n,)`` with ``n >= 2`` (H = G).
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(k) for k in self.parts))
        if not self.parts or any(k < 1 for k in self.parts):
            raise IncompatibleComposition(f"parts must be positive: {self.parts}")

    @classmethod
    def parse(cls, text: str) -> "Composition":
        try:
            return cls(tuple(int(s) for s in text.split(",") if s.strip()))
        except ValueError as exc:
            raise IncompatibleComposition(f"malformed composition {text!r}") from exc

    @classmethod
    def torus(cls, n: int) -> "Composition":
        return cls((1,) * n)

    @classmethod
    def whole(cls, n: int) -> "Composition":
        return cls((n,))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def is_torus(self) -> bool:
        return all(k == 1 for k in self.parts)

    def blocks(self) -> list[range]:
        """0-based coordinate ranges of the blocks."""
        out, start = [], 0
        for k in self.parts:
            out.append(range(start, start + k))
            start += k
        return out

    def __str__(self):
        return ",".join(map(str, self.parts))


def check_compatible(spec: GroupSpec, comp: Composition) -> None:
    if comp.n != spec.rank:
        raise IncompatibleComposition(f"composition {comp} does not sum to rank {spec.rank}")
    if spec.signed and not (comp.is_torus() or len(comp.parts) == 1):
        raise UnsupportedConfiguration(
            f"family {spec.family} supports only compositions (1,..,1) and ({spec.rank})"
        )


def _is_whole_group(spec: GroupSpec, comp: Composition) -> bool:
    # all-ones takes precedence, so B1 with (1,) is the torus
    return len(comp.parts) == 1 and not comp.is_torus()


@dataclass(frozen=True)
class WeylElement:
    perm: tuple[int, ...]  # one-line notation on 1..n
    signs: tuple[int, ...]  # indexed by target coordinate

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise ValueError(f"{self.perm} is not a permutation of 1..{n}")
        if len(self.signs) != n or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"bad sign vector {self.signs}")

    @classmethod
    def identity(cls, n: int) -> "WeylElement":
        return cls(tuple(range(1, n + 1)), (1,) * n)

    @classmethod
    def from_perm(cls, perm: Sequence[int]) -> "WeylElement":
        return cls(tuple(perm), (1,) * len(perm))

    @property
    def n(self) -> int:
        return len(self.perm)

    def image(self, i: int) -> tuple[int, int]:
        """``(sign, j)`` with ``w(e_i) = sign * e_j``; indices 1-based."""
        j = self.perm[i - 1]
        return self.signs[j - 1], j

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if other.n != self.n:
            raise ValueError("rank mismatch")
        perm, signs = [0] * self.n, [1] * self.n
        for i in range(1, self.n + 1):
            s1, j = other.image(i)
            s2, k = self.image(j)
            perm[i - 1] = k
            signs[k - 1] = s1 * s2
        return WeylElement(tuple(perm), tuple(signs))

    def inverse(self) -> "WeylElement":
        perm, signs = [0] * self.n, [1] * self.n
        for i in range(1, self.n + 1):
            s, j = self.image(i)
            perm[j - 1] = i
            signs[i - 1] = s
        return WeylElement(tuple(perm), tuple(signs))

    def matrix(self) -> list[list[int]]:
        m = [[0] * self.n for _ in range(self.n)]
        for i in range(1, self.n + 1):
            s, j = self.image(i)
            m[j - 1][i - 1] = s
        return m

    def apply_vector(self, v: Sequence[int]) -> tuple[int, ...]:
        out = [0] * self.n
        for i, c in enumerate(v, start=1):
            if c:
                s, j = self.image(i)
                out[j - 1] += s * c
        return tuple(out)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(1, self.n + 1)) and all(s == 1 for s in self.signs)


def _check_member(w: WeylElement, spec: GroupSpec) -> None:
    if w.n != spec.rank:
        raise ValueError(f"element of rank {w.n} used with rank {spec.rank}")
    if not spec.signed and any(s != 1 for s in w.signs):
        raise ValueError("type A elements carry no sign changes")


def enumerate_group(spec: GroupSpec, cap: int = DEFAULT_CAP) -> list[WeylElement]:
    """All elements of ``W``, each once, in a fixed order."""
    if spec.order > cap:
        raise EnumerationCapExceeded(f"|W({spec.family}{spec.rank})| = {spec.order} exceeds cap {cap}")
    n = spec.rank
    perms = list(itertools.permutations(range(1, n + 1)))
    if not spec.signed:
        return [WeylElement(p, (1,) * n) for p in perms]
    return [WeylElement(p, s) for p in perms for s in itertools.product((1, -1), repeat=n)]


def _positive_vectors(n: int, signed: bool) -> Iterator[tuple[int, ...]]:
    # type A positive roots, plus e_i + e_j and e_i for the signed group; the
    # long/short distinction of C does not change which roots are positive
    for i in range(n):
        for j in range(i + 1, n):
            v = [0] * n
            v[i], v[j] = 1, -1
            yield tuple(v)
            if signed:
                v[j] = 1
                yield tuple(v)
    if signed:
        for i in range(n):
            v = [0] * n
            v[i] = 1
            yield tuple(v)


def _is_positive(v: Sequence[int]) -> bool:
    for c in v:
        if c:
            return c > 0
    raise ValueError("zero vector")


def length(w: WeylElement, spec: GroupSpec) -> int:
    """Length of a reduced word in the simple reflections.

    Computed as the number of positive roots sent to negative roots, which
    equals the reduced word length.
    """
    _check_member(w, spec)
    if not spec.signed:
        p = w.perm
        return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return sum(1 for v in _positive_vectors(w.n, True) if not _is_positive(w.apply_vector(v)))


def _perm_sign(perm: Sequence[int]) -> int:
    seen, sign = set(), 1
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        j, cycle = start, 0
        while j not in seen:
            seen.add(j)
            j = perm[j - 1]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign


def sign(w: WeylElement, spec: GroupSpec) -> int:
    """``(-1)^length(w)``, computed as the determinant of the signed permutation matrix."""
    _check_member(w, spec)
    return _perm_sign(w.perm) * math.prod(w.signs)


def act(w: WeylElement, p: Polynomial) -> Polynomial:
    """Substitute ``x_i -> signs[w(i)] * x_{w(i)}`` in ``p``."""
    n = w.n
    if p.nvars != n:
        raise ValueError(f"arity mismatch: element of rank {n}, polynomial in {p.nvars} variables")
    targets = [j - 1 for j in w.perm]
    flips = [w.signs[t] for t in targets]
    signed = any(s < 0 for s in flips)

    def move(m):
        out = [0] * n
        f = 1
        for i, e in enumerate(m):
            out[targets[i]] = e
            if signed and e & 1 and flips[i] < 0:
                f = -f
        return tuple(out), f

    return p.map_monomials(move)


def simple_reflections(spec: GroupSpec) -> list[WeylElement]:
    """``s_1 .. s_{n-1}`` (adjacent swaps) and, for B/C, ``s_n`` negating ``x_n``."""
    n = spec.rank
    gens = []
    for i in range(1, n):
        p = list(range(1, n + 1))
        p[i - 1], p[i] = p[i], p[i - 1]
        gens.append(WeylElement.from_perm(p))
    if spec.signed:
        gens.append(WeylElement(tuple(range(1, n + 1)), (1,) * (n - 1) + (-1,)))
    return gens


def parabolic_generators(spec: GroupSpec, comp: Composition) -> list[WeylElement]:
    check_compatible(spec, comp)
    if spec.signed:
        return simple_reflections(spec) if _is_whole_group(spec, comp) else []
    n = spec.rank
    gens = []
    for block in comp.blocks():
        for i in block[:-1]:
            p = list(range(1, n + 1))
            p[i], p[i + 1] = p[i + 1], p[i]
            gens.append(WeylElement.from_perm(p))
    return gens


def parabolic_subgroup(spec: GroupSpec, comp: Composition, cap: int = DEFAULT_CAP) -> list[WeylElement]:
    """All elements of ``W_H``."""
    check_compatible(spec, comp)
    n = spec.rank
    if spec.signed:
        if _is_whole_group(spec, comp):
            return enumerate_group(spec, cap)
        return [WeylElement.identity(n)]
    size = math.prod(math.factorial(k) for k in comp.parts)
    if size > cap:
        raise EnumerationCapExceeded(f"|W_H| = {size} exceeds cap {cap}")
    out = []
    for pieces in itertools.product(*(itertools.permutations(b) for b in comp.blocks())):
        out.append(WeylElement.from_perm([i + 1 for piece in pieces for i in piece]))
    return out


def coset_count(spec: GroupSpec, comp: Composition) -> int:
    check_compatible(spec, comp)
    if spec.signed:
        return 1 if _is_whole_group(spec, comp) else spec.order
    return math.factorial(spec.rank) // math.prod(math.factorial(k) for k in comp.parts)


def coset_reps(spec: GroupSpec, comp: Composition, cap: int = DEFAULT_CAP) -> list[WeylElement]:
    """Minimal-length representatives of the left cosets ``w W_H``.

    In type A these are the permutations whose one-line notation increases
    inside every block.
    """
    count = coset_count(spec, comp)
    if count > cap:
        raise EnumerationCapExceeded(f"{count} coset representatives exceed cap {cap}")
    n = spec.rank
    if spec.signed:
        if _is_whole_group(spec, comp):
            return [WeylElement.identity(n)]
        return enumerate_group(spec, cap)

    out = []

    def fill(block_idx, remaining, prefix):
        if block_idx == len(comp.parts):
            out.append(WeylElement.from_perm(prefix))
            return
        for chosen in itertools.combinations(remaining, comp.parts[block_idx]):
            rest = [v for v in remaining if v not in chosen]
            fill(block_idx + 1, rest, prefix + list(chosen))

    fill(0, list(range(1, n + 1)), [])
    return out


def is_invariant(p: Polynomial, spec: GroupSpec, comp: Composition | None = None) -> bool:
    """True iff every generator of ``W_H`` fixes ``p`` (``comp=None``: all of ``W``)."""
    if p.nvars != spec.rank:
        raise ValueError(f"arity mismatch: {p.nvars} variables, rank {spec.rank}")
    if comp is None:
        gens = simple_reflections(spec)
    else:
        gens = parabolic_generators(spec, comp)
    return all(act(g, p) == p for g in gens)
