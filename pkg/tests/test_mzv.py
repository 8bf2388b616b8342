"""End-to-end values: windows, renormalized values, and consistency checks."""

import math
from fractions import Fraction

import pytest

from renzeta.arith import DELTA, PoleAtZero, zeta_nonpositive
from renzeta.hopf import HopfElement, Word, quasi_shuffle
from renzeta.laurent import DELTA_FIELD, RATIONAL_FIELD, windows_agree
from renzeta.mzv import (
    argument_word,
    decomposition_session,
    expansion_plans,
    generating_check,
    numeric_oracle,
    one_var_series,
    oracle_tail_bound,
    pole_depth,
    regularized_expansion,
    renorm_directional,
    renorm_mzv,
    renormalized_series,
    symmetrized_zero,
    two_var_an_check,
)

F = Fraction
W = Word.from_pairs


class TestArgumentValidation:
    def test_vector_shape(self):
        with pytest.raises(ValueError):
            argument_word((), ())
        with pytest.raises(ValueError):
            argument_word((0, 0), (1,))

    def test_sector(self):
        with pytest.raises(ValueError):
            argument_word((1,), (1,))
        with pytest.raises(ValueError):
            argument_word((0, -1, 2), (1, 1, 1))

    def test_direction_domain(self):
        with pytest.raises(ValueError):
            argument_word((0,), (0,))
        with pytest.raises(ValueError):
            argument_word((0,), (F(-1, 2),))
        with pytest.raises(ValueError):
            argument_word((0,), (1 / DELTA,))

    def test_pole_depth(self):
        assert pole_depth((0, 0)) == 2
        assert pole_depth((-2, -1)) == 5
        assert argument_word((-2, -1), (1, 1)).pole_depth() == 5


class TestOneVarSeries:
    def test_zero_power_direction_one(self):
        s = one_var_series(0, 1, 3)
        assert s.coefficient(-1) == -1
        assert s.coefficient(0) == F(-1, 2)
        assert s.coefficient(1) == F(-1, 12)
        assert s.coefficient(2) == 0

    def test_power_one(self):
        s = one_var_series(1, 1, 2)
        assert s.coefficient(-2) == 1
        assert s.coefficient(-1) == 0
        assert s.coefficient(0) == F(-1, 12)
        assert s.coefficient(1) == 0

    def test_direction_two(self):
        s = one_var_series(0, 2, 1)
        assert s.coefficient(-1) == F(-1, 2)
        assert s.coefficient(0) == F(-1, 2)

    def test_taylor_tail_matches_zeta_values(self):
        s = one_var_series(0, 1, 12)
        for k in range(11):
            assert s.coefficient(k) == \
                zeta_nonpositive(k) / math.factorial(k)

    def test_general_pole_coefficient(self):
        s = one_var_series(3, F(1, 2), 1)
        assert s.coefficient(-4) == (-1) ** 4 * 6 * F(1, 2) ** -4
        assert s.coefficient(-3) == 0
        assert s.coefficient(-2) == 0
        assert s.coefficient(-1) == 0

    def test_delta_direction(self):
        s = one_var_series(0, DELTA, 2)
        assert s.ring is DELTA_FIELD
        assert s.coefficient(-1) == -1 / DELTA
        assert s.coefficient(0) == DELTA.from_rational(F(-1, 2))

    def test_window_validation(self):
        with pytest.raises(ValueError):
            one_var_series(-1, 1, 2)
        with pytest.raises(ValueError):
            one_var_series(0, 1, 0)

    def test_float_cross_check(self):
        eps0 = -0.05
        s = one_var_series(0, 2, 25)
        direct = math.exp(2 * eps0) / (1 - math.exp(2 * eps0))
        assert s.evaluate_float(eps0) == pytest.approx(direct, rel=1e-12)


class TestExpansionPlans:
    def test_zero_exponents_have_single_plan(self):
        plans = list(expansion_plans((0, 0), (1, 1)))
        assert len(plans) == 1
        assert plans[0].slot_exponents == (0, 0)
        assert plans[0].multiplicity == 1
        assert plans[0].cumulative_directions == (F(1), F(2))

    def test_slot_exponents_resum(self):
        for s in [(-1, -2), (-2, 0, -1), (0, -3)]:
            total = sum(-x for x in s)
            plans = list(expansion_plans(s, (1,) * len(s)))
            assert plans
            for plan in plans:
                assert sum(plan.slot_exponents) == total
                assert plan.multiplicity >= 1

    def test_plan_count_depth_two(self):
        # m1 = 1 spreads over two slots, m2 = 1 sits on the last
        assert len(list(expansion_plans((-1, -1), (1, 1)))) == 2


class TestRegularizedExpansion:
    def test_double_zero_window(self):
        s = regularized_expansion((0, 0), (1, 1), 1)
        assert s.coefficient(-2) == F(1, 2)
        assert s.coefficient(-1) == F(3, 4)
        assert s.coefficient(0) == F(11, 24)
        assert s.precision == 1 and s.min_order == -2

    def test_depth_one_equals_one_var(self):
        for m, r in [(0, 1), (1, 2), (2, F(1, 2))]:
            a = regularized_expansion((-m,), (r,), 4)
            b = one_var_series(m, r, 4)
            assert windows_agree(a, b)

    def test_mixed_direction_window(self):
        s = regularized_expansion((0, 0), (1, 2), 2)
        # leading pole: 1/(rho_1 rho_2) = 1/3
        assert s.coefficient(-2) == F(1, 3)

    def test_derivation_compatibility_of_character(self):
        # d/d(eps) of the window equals the direction-weighted sum of
        # windows with one exponent lowered
        s_vec, r_vec = (0, -1), (F(1), F(2))
        lhs = regularized_expansion(s_vec, r_vec, 4).derivative()
        rhs = None
        for i in range(2):
            lowered = list(s_vec)
            lowered[i] -= 1
            term = regularized_expansion(
                tuple(lowered), r_vec, 4).scale(r_vec[i])
            rhs = term if rhs is None else rhs + term
        assert windows_agree(lhs, rhs)

    def test_float_cross_check_depth_two(self):
        eps0 = -0.1
        s = regularized_expansion((-1, 0), (1, 1), 30)
        num = numeric_oracle((-1, 0), (1, 1), eps0, 4000)
        tail = oracle_tail_bound((-1, 0), (1, 1), eps0, 4000)
        assert tail < 1e-9
        assert s.evaluate_float(eps0) == pytest.approx(num, rel=1e-9)

    def test_delta_window_specializes_to_rational_window(self):
        delta_s = regularized_expansion((0, 0), (DELTA + 1, DELTA + 1), 1)
        rational_s = regularized_expansion((0, 0), (F(1), F(1)), 1)
        for k in range(-2, 1):
            c = delta_s.coefficient(k)
            assert c.evaluate(0) == rational_s.coefficient(k)


class TestRenormalizedValues:
    def test_depth_one_direction_free(self):
        assert renorm_mzv((0,)) == F(-1, 2)
        assert renorm_mzv((-1,)) == F(-1, 12)
        assert renorm_mzv((-2,)) == 0
        assert renorm_mzv((-3,)) == F(1, 120)

    def test_depth_one_any_direction(self):
        for r in (F(1), F(2), F(7, 3)):
            assert renorm_directional((-1,), (r,)) == F(-1, 12)
            assert renorm_directional((0,), (r,)) == F(-1, 2)

    def test_double_zero(self):
        assert renorm_mzv((0, 0)) == F(3, 8)
        assert renorm_directional((0, 0), (1, 1)) == F(3, 8)

    def test_double_zero_directional_values(self):
        assert renorm_directional((0, 0), (1, 2)) == F(13, 36)
        assert renorm_directional((0, 0), (2, 1)) == F(7, 18)

    def test_symmetrized_recovers_direction_free(self):
        assert symmetrized_zero(2, (1, 2)) == F(3, 8)
        assert symmetrized_zero(2, (3, 5)) == F(3, 8)
        assert symmetrized_zero(1, (4,)) == F(-1, 2)

    def test_direction_limit_stability_for_zero_words(self):
        # equal delta directions give the constant rational function
        v = renorm_directional((0, 0), (DELTA, DELTA))
        assert v == DELTA.from_rational(F(3, 8))
        v3 = renorm_directional((0, 0, 0), (DELTA, DELTA, DELTA))
        assert v3.limit_at_zero() == renorm_mzv((0, 0, 0))

    def test_value_level_quasi_shuffle(self):
        # zeta(0)^2 = 2 zbar(0,0) + zeta(0) via the merged letter
        lhs = renorm_directional((0,), (1,)) ** 2
        rhs = 2 * renorm_directional((0, 0), (1, 1)) \
            + renorm_directional((0,), (2,))
        assert lhs == rhs == F(1, 4)

    def test_value_level_quasi_shuffle_general(self):
        # the renormalized character respects u * v at equal directions
        u = W([(0, 1)])
        v = W([(-1, 1)])
        prod = quasi_shuffle(
            HopfElement.from_word(u), HopfElement.from_word(v))
        lhs = renorm_directional((0,), (1,)) \
            * renorm_directional((-1,), (1,))
        rhs = F(0)
        for word, coeff in prod.terms.items():
            rhs += coeff * renorm_directional(
                tuple(l.s for l in word), tuple(l.r for l in word))
        assert lhs == rhs

    def test_renormalized_series_taylor_window(self):
        s = renormalized_series((0, 0), (1, 1), 3)
        assert s.min_order >= 0
        assert s.precision >= 4
        assert s.constant_term() == F(3, 8)
        assert s.coefficient(1) == F(1, 8)

    def test_distinct_from_superseded_conventions(self):
        # the quasi-shuffle-compatible value, not 5/12 or 1/3
        v = renorm_mzv((0, 0))
        assert v == F(3, 8)
        assert v != F(5, 12)
        assert v != F(1, 3)


class TestGeneratingIdentity:
    def test_depth_two(self):
        rep = generating_check(2, (1, 2), 3)
        assert rep.passed
        assert rep.check == "generating-function"

    def test_depth_three(self):
        rep = generating_check(3, (1, 1, 2), 2)
        assert rep.passed

    def test_depth_one(self):
        assert generating_check(1, (3,), 4).passed


class TestTwoVarCoefficientFormula:
    @pytest.mark.parametrize("n", range(5))
    def test_unit_directions(self, n):
        assert two_var_an_check(n, 1, 1).passed

    @pytest.mark.parametrize("n", range(4))
    def test_skew_directions(self, n):
        assert two_var_an_check(n, F(1, 2), F(3)).passed
        assert two_var_an_check(n, F(2), F(1, 3)).passed


class TestNumericOracle:
    def test_depth_one_closed_form(self):
        eps0 = -0.1
        got = numeric_oracle((0,), (1,), eps0, 3000)
        closed = math.exp(eps0) / (1 - math.exp(eps0))
        assert got == pytest.approx(closed, rel=1e-12)

    def test_layered_sum_matches_naive_double_loop(self):
        eps0 = -0.2
        terms = 60
        naive = 0.0
        for n1 in range(2, terms + 1):
            for n2 in range(1, n1):
                naive += n1 * math.exp(n1 * eps0) \
                    * math.exp(n2 * 2 * eps0)
        got = numeric_oracle((-1, 0), (1, 2), eps0, terms)
        assert got == pytest.approx(naive, rel=1e-12)

    def test_validation(self):
        with pytest.raises(ValueError):
            numeric_oracle((0,), (1,), 0.1, 100)
        with pytest.raises(ValueError):
            numeric_oracle((0,), (1,), -0.1, 0)
        with pytest.raises(TypeError):
            numeric_oracle((0,), (DELTA,), -0.1, 100)

    def test_tail_bound_shrinks(self):
        b1 = oracle_tail_bound((0, 0), (1, 1), -0.1, 500)
        b2 = oracle_tail_bound((0, 0), (1, 1), -0.1, 2000)
        assert 0 < b2 < b1
