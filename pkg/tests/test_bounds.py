import math
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from bernfloat.bernstein import RationalPoly, family_rational, round_coeffs
from bernfloat.bounds import (
    FamilySpec,
    PoleError,
    amplification_factor,
    check_triangle_ratio,
    decasteljau_bound,
    detect_family,
    improved_bound,
    naive_bound,
    vs_bound,
)
from bernfloat.evaluators import decasteljau
from bernfloat.experiments import growth_factor, point_v
from bernfloat.fpmodel import ceil_to_float, gamma
from bernfloat.oracle import condition_number, eval_exact, relative_error

family_specs = st.builds(
    FamilySpec,
    b0=st.floats(min_value=1e-100, max_value=1e100, allow_nan=False).flatmap(
        lambda m: st.sampled_from([m, -m])
    ),
    t=st.integers(min_value=-8, max_value=8),
    n=st.integers(min_value=1, max_value=20),
)


class TestFamilySpec:
    def test_coefficients_quintic(self):
        spec = FamilySpec(1.0, 2, 5)
        assert spec.coefficients().coeffs == (1.0, -4.0, 16.0, -64.0, 256.0, -1024.0)

    def test_rejects_zero_b0(self):
        with pytest.raises(ValueError):
            FamilySpec(0.0, 1, 3)

    def test_rejects_unrepresentable_extremes(self):
        with pytest.raises(ValueError):
            FamilySpec(1e-300, -8, 20)  # underflows past the subnormals
        with pytest.raises(ValueError):
            FamilySpec(1e300, 8, 20)  # overflows


class TestDetectFamily:
    def test_powers_of_two_quintic(self):
        poly, _ = round_coeffs(family_rational(1, 2, 5))
        spec = detect_family(poly)
        assert spec == FamilySpec(b0=1.0, t=2, n=5)

    def test_degree20_with_tiny_leading_coefficient(self):
        poly, _ = round_coeffs(family_rational(Fraction(1, 2 ** 20), 0, 20))
        spec = detect_family(poly)
        assert spec == FamilySpec(b0=2.0 ** -20, t=0, n=20)

    def test_ratio_three_is_not_a_member(self):
        poly, _ = round_coeffs(RationalPoly([1, -3, 9]))
        assert detect_family(poly) is None

    def test_positive_ratio_is_not_a_member(self):
        poly, _ = round_coeffs(RationalPoly([1, 2, 4]))
        assert detect_family(poly) is None

    def test_zero_coefficient_gives_none(self):
        poly, _ = round_coeffs(RationalPoly([1, 0, 1]))
        assert detect_family(poly) is None

    def test_inconsistent_later_ratio_gives_none(self):
        poly, _ = round_coeffs(RationalPoly([1, -2, 8]))
        assert detect_family(poly) is None

    def test_degree_zero_gives_none(self):
        poly, _ = round_coeffs(RationalPoly([5]))
        assert detect_family(poly) is None

    @given(family_specs)
    def test_round_trip(self, spec):
        assert detect_family(spec.coefficients()) == spec


class TestAmplificationFactor:
    def test_one_at_zero(self):
        for t in (-5, 0, 3, 40):
            assert amplification_factor(t, 0) == 1

    def test_fig2_point_closed_form(self):
        # at s = 1/5 + 8/(25N) the factor collapses to -N - 3/5
        for e in (1, 7, 30):
            big_n = Fraction(growth_factor(e))
            s = Fraction(1, 5) + Fraction(8, 25) / big_n
            assert amplification_factor(2, s) == -big_n - Fraction(3, 5)

    def test_endpoint_t_zero(self):
        assert amplification_factor(0, 1) == -1

    def test_pole(self):
        with pytest.raises(PoleError):
            amplification_factor(0, Fraction(1, 2))
        with pytest.raises(PoleError):
            amplification_factor(2, Fraction(1, 5))

    def test_float_points_are_taken_exactly(self):
        # fl(0.2) is not 1/5, so no pole is hit with t=2
        value = amplification_factor(2, 0.2)
        assert abs(value) > Fraction(10) ** 15


class TestImprovedAndNaiveBounds:
    def test_improved_at_zero(self):
        for n in (1, 5, 20):
            expected = ceil_to_float((1 + Fraction(gamma(3))) ** n - 1)
            got = improved_bound(n, 2, 0)
            assert got == expected
            assert got == pytest.approx(n * gamma(3), rel=1e-9)

    def test_equal_at_degree_one(self):
        for s in (0.1, 0.3, 0.77):
            assert improved_bound(1, 2, s) == naive_bound(1, 2, s)

    def test_naive_closed_form_amp_ten(self):
        # s = 9/53 makes the amplification factor exactly 10 for t = 2
        s = Fraction(9, 53)
        assert amplification_factor(2, s) == 10
        assert naive_bound(5, 2, s) == ceil_to_float(Fraction(gamma(15)) * 10 ** 5)

    def test_frozen_extreme_point(self):
        # rightmost grid point: the improved bound stays order one while
        # the general bound is astronomically large
        s = point_v(45)
        assert improved_bound(5, 2, s) == 0.65113636305172
        assert naive_bound(5, 2, s) == 5.308762172706074e+57
        assert naive_bound(5, 2, s) / improved_bound(5, 2, s) > 1e50

    def test_improved_below_naive_on_fig2_grid(self):
        g3, g15 = Fraction(gamma(3)), Fraction(gamma(15))
        for e in range(2, 46):
            amp = abs(amplification_factor(2, point_v(e)))
            improved_exact = (1 + amp * g3) ** 5 - 1
            naive_exact = g15 * amp ** 5
            assert improved_exact < naive_exact
            assert improved_bound(5, 2, point_v(e)) <= naive_bound(5, 2, point_v(e))

    def test_improved_never_above_naive_grid(self):
        # |amp| >= 1 everywhere on [0,1], so dominance holds at any point
        for t in (-3, 0, 2, 5):
            for n in (1, 2, 3, 5, 20):
                for numer in range(0, 21):
                    s = Fraction(numer, 20)
                    try:
                        assert improved_bound(n, t, s) <= naive_bound(n, t, s)
                    except PoleError:
                        pass

    def test_degree_validation(self):
        with pytest.raises(ValueError):
            improved_bound(0, 2, 0.1)
        with pytest.raises(ValueError):
            naive_bound(0, 2, 0.1)

    def test_pole_propagates(self):
        with pytest.raises(PoleError):
            improved_bound(5, 0, 0.5)


class TestAlgorithmBounds:
    def test_decasteljau_bound_single_sign(self):
        p = RationalPoly([1, 2, 3, 4, 5, 6])
        assert decasteljau_bound(p, Fraction(1, 3)) == Fraction(gamma(15))

    def test_decasteljau_bound_is_gamma_times_cond(self):
        p = RationalPoly([Fraction(-3) ** j for j in range(6)])
        s = Fraction(point_v(9))
        assert decasteljau_bound(p, s) == Fraction(gamma(15)) * condition_number(p, s)

    def test_degree_zero_bound_is_zero(self):
        assert decasteljau_bound(RationalPoly([7]), Fraction(1, 2)) == 0

    def test_infinite_at_root(self):
        p = family_rational(1, 2, 5)
        assert decasteljau_bound(p, Fraction(1, 5)) == math.inf

    def test_vs_bound_branches(self):
        p = RationalPoly([1] * 21)  # cond = 1, n = 20
        below = vs_bound(p, Fraction(12, 25))
        at_half = vs_bound(p, Fraction(1, 2))
        above = vs_bound(p, Fraction(9, 10))
        assert below.value == Fraction(gamma(120))
        assert at_half.value == Fraction(gamma(100))
        assert above.value == Fraction(gamma(100))
        assert below.valid and at_half.valid and above.valid

    def test_vs_bound_invalid_above_degree_56(self):
        p = RationalPoly([1] * 58)  # degree 57
        res = vs_bound(p, Fraction(1, 4))
        assert not res.valid
        assert res.value == Fraction(gamma(6 * 57))

    def test_vs_bound_domain(self):
        with pytest.raises(ValueError):
            vs_bound(RationalPoly([1, 2]), Fraction(3, 2))


class TestCheckTriangleRatio:
    def test_quintic_family_across_points(self):
        spec = FamilySpec(1.0, 2, 5)
        poly = spec.coefficients()
        for s in (0.0, 0.1, 0.2, 1.0 / 3.0, 0.5, 0.9, 1.0):
            _, tri = decasteljau(poly, s)
            assert check_triangle_ratio(tri, spec) is True

    def test_degree_one_vacuous_level(self):
        spec = FamilySpec(3.0, 1, 1)
        _, tri = decasteljau(spec.coefficients(), 0.42)
        assert check_triangle_ratio(tri, spec) is True

    def test_exact_cancellation_to_zero_still_passes(self):
        # t=0 at s=0.5 collapses a whole level to exact zeros
        spec = FamilySpec(1.0, 0, 4)
        _, tri = decasteljau(spec.coefficients(), 0.5)
        assert check_triangle_ratio(tri, spec) is True

    def test_subnormal_intermediate_is_indeterminate(self):
        spec = FamilySpec(2.0 ** -1020, -2, 2)
        _, tri = decasteljau(spec.coefficients(), 0.25)
        assert check_triangle_ratio(tri, spec) is None

    def test_rejects_foreign_triangle(self):
        spec = FamilySpec(1.0, 2, 5)
        _, tri = decasteljau([1.0, 2.0, 3.0, 4.0, 5.0, 6.0], 0.3)
        with pytest.raises(ValueError):
            check_triangle_ratio(tri, spec)

    @given(family_specs, st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
    def test_holds_for_random_family_inputs(self, spec, s):
        _, tri = decasteljau(spec.coefficients(), s)
        assert check_triangle_ratio(tri, spec) is not False


class TestImprovedBoundDominatesObservedError:
    @given(family_specs, st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
    def test_family_error_within_improved_bound(self, spec, s):
        poly = spec.coefficients()
        _, tri = decasteljau(poly, s)
        # the improved bound's premises need the exact-ratio propagation,
        # which underflow/overflow can break; skip indeterminate triangles
        assume(check_triangle_ratio(tri, spec) is True)
        try:
            bound = improved_bound(spec.n, spec.t, s)
        except PoleError:
            assume(False)
        value, _ = decasteljau(poly, s)
        exact = eval_exact(poly.as_rational(), Fraction(s))
        err = relative_error(exact, value).rel_error
        if exact != 0:
            assert err <= Fraction(bound)
