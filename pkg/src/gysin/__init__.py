"""Exact Gysin pushforwards of flag bundles via Weyl-group symmetrizers."""

from .arith import (
    NEG_INF,
    Polynomial,
    Rational,
    RationalFunction,
    exact_divide,
    frac_add,
    frac_to_polynomial,
    poly_add,
    poly_eval,
    poly_mul,
)
from .errors import (
    EnumerationCapExceeded,
    GysinError,
    IncompatibleComposition,
    InvarianceError,
    NotDivisible,
    ParseError,
    UnsupportedConfiguration,
)
from .expr import format_polynomial, parse
from .pushforward import (
    BundleSpec,
    FixedPointDatum,
    block_jacobi,
    box_operator,
    euler_at,
    gysin_pushforward,
    jacobi_symmetrize,
    lagrange_sylvester,
    localization_sum,
    pushforward_via_factorization,
    restriction_at,
)
from .roots import Convention, Root, RootSystemData, euler_denominator, parabolic_positive_roots, positive_roots, root_to_linear
from .schubert import (
    Partition,
    complete_homogeneous,
    divided_difference,
    elementary_symmetric,
    jacobi_via_divided_differences,
    schur_bialternant,
    segre_check,
)
from .weyl import (
    Composition,
    GroupSpec,
    WeylElement,
    act,
    coset_reps,
    enumerate_group,
    is_invariant,
    length,
    sign,
)

__version__ = "0.1.0"
