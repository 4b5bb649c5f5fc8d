import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gysin.arith import Polynomial
from gysin.errors import InvarianceError, NotDivisible, UnsupportedConfiguration
from gysin.expr import parse
from gysin.pushforward import (
    BundleSpec,
    Convention,
    FixedPointDatum,
    block_jacobi,
    box_operator,
    closed_numerator_pushforward,
    euler_at,
    fixed_point_data,
    gysin_pushforward,
    jacobi_symmetrize,
    lagrange_sylvester,
    localization_sum,
    pushforward_via_factorization,
    restriction_at,
)
from gysin.schubert import elementary_symmetric
from gysin.weyl import Composition, GroupSpec, WeylElement, is_invariant
from gysin.verify import symmetrize

from .brute import brute_pushforward, evaluate, polynomials, random_point

A312 = BundleSpec(GroupSpec("A", 3), Composition((1, 2)))


def agrees_with_brute(result, b, family, parts, sym=False, points=3, seed=0):
    rng = random.Random(seed)
    for _ in range(points):
        pt = random_point(sum(parts), rng)
        if evaluate(result, pt) != brute_pushforward(b, family, parts, pt, sym):
            return False
    return True


class TestRestrictionAndEuler:
    def test_restriction_swap(self):
        bundle = BundleSpec.full_flag("A", 2)
        assert restriction_at(WeylElement.from_perm((2, 1)), parse("u1", 2), bundle) == parse("u2", 2)

    @given(polynomials(3))
    def test_restriction_identity(self, b):
        assert restriction_at(WeylElement.identity(3), b, BundleSpec.full_flag("A", 3)) == b

    def test_restriction_cycle(self):
        cycle = WeylElement.from_perm((2, 3, 1))
        b = parse("u1*(u2 + u3)", 3)
        assert restriction_at(cycle, b, A312) == parse("u2*(u3 + u1)", 3)

    def test_restriction_checks_invariance(self):
        with pytest.raises(InvarianceError):
            restriction_at(WeylElement.identity(3), parse("u2", 3), A312)

    def test_euler_examples(self):
        a2 = BundleSpec.full_flag("A", 2)
        assert euler_at(WeylElement.identity(2), a2) == parse("u1 - u2", 2)
        assert euler_at(WeylElement.from_perm((2, 1)), a2) == parse("u2 - u1", 2)
        assert euler_at(WeylElement.from_perm((2, 1, 3)), A312) == parse("(u2-u1)*(u2-u3)", 3)

    def test_euler_sign_is_weyl_sign(self):
        from gysin.weyl import enumerate_group, sign

        for fam in "ABC":
            bundle = BundleSpec.full_flag(fam, 3)
            base = euler_at(WeylElement.identity(3), bundle)
            for w in enumerate_group(bundle.group):
                assert euler_at(w, bundle) == base * sign(w, bundle.group)


class TestLocalizationSum:
    def test_two_points(self):
        x1, x2 = parse("x1", 2), parse("x2", 2)
        data = [FixedPointDatum(x1, x1 - x2), FixedPointDatum(x2, x2 - x1)]
        assert localization_sum(data) == 1

    def test_cancellation(self):
        one = Polynomial.one(2)
        d = parse("x1 - x2", 2)
        assert localization_sum([FixedPointDatum(one, d), FixedPointDatum(one, -d)]).is_zero()

    def test_point_fiber(self):
        p = parse("x1^2 + 1/3", 1)
        assert localization_sum([FixedPointDatum(p, Polynomial.one(1))]) == p

    def test_single_pole(self):
        with pytest.raises(NotDivisible):
            localization_sum([FixedPointDatum(parse("x1", 2), parse("x1 - x2", 2))])

    def test_zero_euler_rejected(self):
        with pytest.raises(ZeroDivisionError):
            FixedPointDatum(Polynomial.one(2), Polynomial.zero(2))

    def test_unfactored_matches_factored(self):
        b = parse("x1^3*x2 + 2*x3^4", 3)
        data = fixed_point_data(b, BundleSpec.full_flag("A", 3))
        plain = [FixedPointDatum(d.restriction, d.euler) for d in data]
        assert localization_sum(plain) == localization_sum(data)


class TestGysinPushforward:
    def test_projective_examples(self):
        # sum_i x_i^3 / prod_{j != i} (x_i - x_j) = h_1 and with x_i^2 gives 1
        b3, b2 = parse("x1^3", 3), parse("x1^2", 3)
        assert agrees_with_brute(parse("x1 + x2 + x3", 3), b3, "A", (1, 2))
        assert agrees_with_brute(Polynomial.one(3), b2, "A", (1, 2))
        assert gysin_pushforward(b3, A312) == parse("x1 + x2 + x3", 3)
        assert gysin_pushforward(b2, A312) == 1

    @pytest.mark.parametrize("bundle", [A312, BundleSpec.full_flag("A", 3), BundleSpec.full_flag("C", 2)])
    def test_degree_drop_forces_zero(self, bundle):
        assert gysin_pushforward(Polynomial.one(bundle.n), bundle).is_zero()

    def test_invariance_violation(self):
        with pytest.raises(InvarianceError):
            gysin_pushforward(parse("x2", 3), A312)

    def test_expert_flag_skips_invariance_check(self):
        # the coset sum of a non-invariant class need not be a polynomial
        with pytest.raises(NotDivisible):
            gysin_pushforward(parse("x2^2", 3), A312, check_invariance=False)
        b = parse("x1^2", 3)
        assert gysin_pushforward(b, A312, check_invariance=False) == gysin_pushforward(b, A312)

    def test_point_fiber_is_identity(self):
        bundle = BundleSpec(GroupSpec("A", 3), Composition.whole(3))
        b = parse("x1 + x2 + x3", 3)
        assert gysin_pushforward(b, bundle) == b

    @settings(max_examples=25, deadline=None)
    @given(st.sampled_from([(3, (1, 2)), (4, (2, 2)), (4, (1, 3)), (4, (1, 1, 2)), (3, (1, 1, 1))]),
           st.integers(0, 6), st.integers(0, 2**32))
    def test_agrees_with_brute_force(self, case, degree, seed):
        n, parts = case
        rng = random.Random(seed)
        spec, comp = GroupSpec("A", n), Composition(parts)
        mono = [0] * n
        for _ in range(degree):
            mono[rng.randrange(n)] += 1
        b = symmetrize(Polynomial.monomial(mono, rng.randint(1, 5)), spec, comp)
        bundle = BundleSpec(spec, comp)
        out = gysin_pushforward(b, bundle)
        assert agrees_with_brute(out, b, "A", parts, seed=seed)
        assert is_invariant(out, spec)


class TestJacobi:
    def test_examples(self):
        assert jacobi_symmetrize(parse("x1", 2), 2) == 1
        assert jacobi_symmetrize(parse("x1^2", 2), 2) == parse("x1 + x2", 2)
        assert jacobi_symmetrize(parse("x1^2*x2", 2), 2) == parse("x1*x2", 2)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), polynomials(n, 7, 4))))
    def test_both_forms(self, case):
        n, b = case
        assert jacobi_symmetrize(b, n, method="both") == jacobi_symmetrize(b, n)

    @pytest.mark.parametrize("family", "ABC")
    def test_signed_forms_agree(self, family):
        rng = random.Random(3)
        for _ in range(10):
            n = rng.randint(1, 3)
            mono = [rng.randint(0, 5) for _ in range(n)]
            b = Polynomial.monomial(mono, rng.randint(-3, 3)) + Polynomial.monomial([rng.randint(0, 4) for _ in range(n)])
            bundle = BundleSpec.full_flag(family, n)
            loc = gysin_pushforward(b, bundle, method="localize")
            assert loc == closed_numerator_pushforward(b, bundle)
            assert agrees_with_brute(loc, b, family, (1,) * n)

    def test_closed_form_needs_full_flag(self):
        with pytest.raises(ValueError):
            closed_numerator_pushforward(parse("x1", 3), A312)


class TestLagrangeSylvester:
    def test_examples(self):
        assert lagrange_sylvester(parse("x1", 2), 2, 1) == 1
        assert lagrange_sylvester(parse("x1^3", 3), 3, 1) == parse("x1 + x2 + x3", 3)
        b = parse("x1*x2", 3)
        assert agrees_with_brute(Polynomial.one(3), b, "A", (2, 1))
        assert lagrange_sylvester(b, 3, 2) == 1

    def test_rejects_noninvariant(self):
        with pytest.raises(InvarianceError):
            lagrange_sylvester(parse("x1", 3), 3, 2)


class TestBox:
    def test_type_a_matches_lagrange_sylvester(self):
        b = parse("x1^2", 3)
        assert box_operator(b, A312) == lagrange_sylvester(b, 3, 1) == 1

    def test_b1(self):
        b = parse("x1^2", 1)
        # x1^2/x1 + (-x1)^2/(-x1)
        assert brute_pushforward(b, "B", (1,), [Fraction(7, 3)]) == 0
        assert box_operator(b, BundleSpec.full_flag("B", 1)).is_zero()
        assert box_operator(parse("x1", 1), BundleSpec.full_flag("B", 1)) == 2
        assert box_operator(parse("x1", 1), BundleSpec.full_flag("C", 1)) == 1

    def test_degree_drop(self):
        assert box_operator(Polynomial.one(2), BundleSpec.full_flag("B", 2)).is_zero()

    def test_unsupported_parabolic(self):
        with pytest.raises(UnsupportedConfiguration):
            BundleSpec(GroupSpec("B", 3), Composition((1, 2)))

    def test_whole_group_requires_invariance(self):
        bundle = BundleSpec(GroupSpec("C", 2), Composition.whole(2))
        with pytest.raises(InvarianceError):
            box_operator(parse("x1^2", 2), bundle)
        b = parse("x1^2 + x2^2", 2)
        assert box_operator(b, bundle) == b

    def test_half_integral_roots(self):
        # x1^3/(2 x1) + (-x1)^3/(-2 x1)
        b = parse("x1^3", 1)
        assert brute_pushforward(b, "C", (1,), [Fraction(5, 2)]) == Fraction(25, 4)
        assert box_operator(b, BundleSpec.full_flag("C", 1)) == parse("x1^2", 1)


class TestFactorization:
    def test_examples(self):
        assert pushforward_via_factorization(parse("x1^2", 2), 2, 1) == parse("x1 + x2", 2)
        assert pushforward_via_factorization(Polynomial.one(3), 3, 1).is_zero()

    def test_block_jacobi_size_one_blocks(self):
        b = parse("x1^2 + 3*x2", 2)
        assert block_jacobi(b, Composition.torus(2)) == b

    @settings(max_examples=30, deadline=None)
    @given(st.integers(2, 4).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1), polynomials(n, 7, 3))))
    def test_equals_jacobi(self, case):
        n, k, b = case
        assert pushforward_via_factorization(b, n, k) == jacobi_symmetrize(b, n)

    def test_random_degree_four(self):
        rng = random.Random(11)
        terms = {}
        for _ in range(5):
            mono = [0] * 4
            for _ in range(4):
                mono[rng.randrange(4)] += 1
            terms[tuple(mono)] = rng.randint(-9, 9)
        b = Polynomial(4, terms)
        assert pushforward_via_factorization(b, 4, 2) == jacobi_symmetrize(b, 4)


class TestOperatorLaws:
    @settings(max_examples=25, deadline=None)
    @given(polynomials(3, 5, 3), polynomials(3, 5, 3), st.fractions(-4, 4, max_denominator=5), st.fractions(-4, 4, max_denominator=5))
    def test_linearity(self, b, c, alpha, beta):
        lhs = jacobi_symmetrize(b * alpha + c * beta, 3)
        assert lhs == jacobi_symmetrize(b, 3) * alpha + jacobi_symmetrize(c, 3) * beta

    @settings(max_examples=20, deadline=None)
    @given(polynomials(3, 4, 3), st.integers(1, 3))
    def test_projection_formula(self, b, k):
        s = elementary_symmetric(k, 3) + Polynomial.constant(3, 2)
        assert jacobi_symmetrize(s * b, 3) == s * jacobi_symmetrize(b, 3)
        inv = symmetrize(b, GroupSpec("A", 3), Composition((1, 2)))
        assert lagrange_sylvester(s * inv, 3, 1) == s * lagrange_sylvester(inv, 3, 1)

    @settings(max_examples=20, deadline=None)
    @given(polynomials(3, 6, 3))
    def test_convention_relation(self, b):
        for bundle in (BundleSpec.full_flag("A", 3), BundleSpec.full_flag("B", 3)):
            m = bundle.fiber_dimension
            prop = gysin_pushforward(b, bundle)
            sym = gysin_pushforward(b, bundle.with_convention(Convention.SYM))
            assert prop == sym * (-1) ** m

    @settings(max_examples=20, deadline=None)
    @given(polynomials(3, 7, 4))
    def test_degree_law_homogeneous(self, b):
        for d in range(8):
            part = b.homogeneous_component(d)
            out = jacobi_symmetrize(part, 3)
            if d < 3:
                assert out.is_zero()
            if not out.is_zero():
                assert out.degree == d - 3
