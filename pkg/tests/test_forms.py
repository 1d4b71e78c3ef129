"""Linear forms, beta forms, the operator S', and closure sets."""

import pytest
from hypothesis import given, settings, strategies as st

from polyreal import (
    LatticeElement,
    LinearForm,
    RootDataError,
    beta_index,
    beta_pair,
    check_xi_positivity,
    closure,
    evaluate,
    index_to_pair,
    s_prime,
)
from polyreal.forms import max_single_index
from conftest import make_seq

x = LinearForm.x


class TestLinearForm:
    def test_algebra(self):
        f = x(1, 1) + x(2, 1) - 2 * x(1, 2)
        assert f.coeff(1, 1) == 1
        assert f.coeff(1, 2) == -2
        assert f.coeff(5, 1) == 0

    def test_cancellation(self):
        f = x(1, 1) - x(1, 1)
        assert f.is_zero() and f == LinearForm.zero()

    def test_scalar(self):
        f = 3 * x(2, 2)
        assert f == x(2, 2) * 3
        assert (-1) * f == -f

    def test_str(self):
        f = x(1, 1) + 2 * x(2, 1) - x(3, 1)
        assert str(f) == "x[1,1] + 2 x[2,1] - x[3,1]"
        assert str(LinearForm.zero()) == "0"
        assert str(-x(1, 2)) == "-x[1,2]"

    def test_occurrence_below_one_rejected(self):
        with pytest.raises(ValueError):
            LinearForm({(0, 1): 1})

    def test_json_round_trip(self):
        f = 2 * x(1, 3) - x(4, 2)
        assert LinearForm.from_json(f.to_json()) == f

    def test_sort_key_orders_terms(self):
        forms = [x(2, 1), x(1, 2), x(1, 1)]
        assert sorted(forms, key=LinearForm.sort_key) == [x(1, 1), x(1, 2), x(2, 1)]


class TestBeta:
    def test_a1_rank2_golden(self, a1_n2):
        assert beta_pair(a1_n2, 1, 1) == x(1, 1) + x(2, 1) - 2 * x(1, 2)
        assert beta_pair(a1_n2, 1, 2) == x(1, 2) + x(2, 2) - 2 * x(2, 1)

    def test_a2_n3_golden(self, a2_n3):
        for s in (1, 2, 3):
            assert beta_pair(a2_n3, s, 1) == x(s, 1) + x(s + 1, 1) - x(s + 1, 2)
            assert beta_pair(a2_n3, s + 1, 2) == (
                x(s + 1, 2) + x(s + 2, 2) - 2 * x(s + 1, 1) - x(s + 1, 3)
            )

    def test_s_below_one_rejected(self, a1_n3):
        with pytest.raises(RootDataError):
            beta_pair(a1_n3, 0, 1)

    @pytest.mark.parametrize("family", ["A1", "C1", "A2", "D2"])
    def test_single_and_double_index_agree(self, family):
        seq = make_seq(family, 3)
        for j in range(1, 31):
            s, l = index_to_pair(seq, j)
            assert beta_index(seq, j) == beta_pair(seq, s, l)


class TestSPrime:
    def test_positive_coefficient_subtracts(self, a1_n2):
        f = x(1, 1)
        assert s_prime(a1_n2, f, (1, 1)) == f - beta_pair(a1_n2, 1, 1)

    def test_negative_coefficient_deeper_adds(self, a1_n2):
        f = -x(2, 1)
        assert s_prime(a1_n2, f, (2, 1)) == f + beta_pair(a1_n2, 1, 1)

    def test_negative_coefficient_at_first_is_identity(self, a1_n2):
        f = -x(1, 1)
        assert s_prime(a1_n2, f, (1, 1)) == f

    def test_zero_coefficient_is_identity(self, a1_n2):
        f = x(1, 1)
        assert s_prime(a1_n2, f, (3, 2)) == f


class TestClosure:
    def test_depth_zero_is_seeds(self, a1_n3):
        seeds = {x(1, 1), x(1, 2)}
        got, pruned = closure(a1_n3, seeds, 0)
        assert got == seeds and pruned == 0

    def test_grows_with_depth(self, a2_n3):
        small, _ = closure(a2_n3, [x(1, 2)], 1)
        large, _ = closure(a2_n3, [x(1, 2)], 2)
        assert small <= large and len(small) < len(large)

    def test_deterministic(self, c1_n3):
        runs = [closure(c1_n3, [x(1, 3)], 3) for _ in range(2)]
        assert runs[0] == runs[1]

    def test_tiny_bound_prunes(self, a1_n3):
        _, pruned = closure(a1_n3, [x(1, 1)], 4, index_bound=4)
        assert pruned > 0

    def test_standard_bound_no_pruning(self, a1_n3):
        for k in (1, 2, 3):
            _, pruned = closure(a1_n3, [x(1, k)], 4)
            assert pruned == 0

    def test_max_single_index(self, a1_n3):
        assert max_single_index(a1_n3, LinearForm.zero()) == 0
        assert max_single_index(a1_n3, x(1, 1) + x(2, 3)) == 6


class TestEvaluate:
    def test_golden(self, a1_n3):
        f = x(1, 2) + 2 * x(1, 1) - x(2, 2)
        a = LatticeElement({1: 3, 2: 1, 4: 5})
        assert evaluate(a1_n3, f, a) == 3 + 2 * 1 - 5

    def test_zero_form(self, a1_n3):
        a = LatticeElement({1: 9})
        assert evaluate(a1_n3, LinearForm.zero(), a) == 0

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=-3, max_value=3), st.integers(min_value=-3, max_value=3))
    def test_linear_in_form(self, c1, c2):
        seq = make_seq("A1", 3)
        f, g = x(1, 1), x(2, 2)
        a = LatticeElement({1: 2, 5: 1})
        assert evaluate(seq, c1 * f + c2 * g, a) == c1 * evaluate(seq, f, a) + c2 * evaluate(seq, g, a)


class TestXiPositivity:
    def test_clean_set_passes(self, a1_n3):
        forms, _ = closure(a1_n3, [x(1, 2)], 3)
        ok, witnesses = check_xi_positivity(a1_n3, forms)
        assert ok and witnesses == []

    def test_flags_negative_first_occurrence(self, a1_n3):
        bad = x(2, 1) - x(1, 3)
        ok, witnesses = check_xi_positivity(a1_n3, [bad])
        assert not ok
        assert witnesses == [(bad, (1, 3), -1)]
