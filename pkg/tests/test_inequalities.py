"""Inequality sweeps: positivity, pair forms, alternating identity."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from janostab.inequalities import (
    GridSpec,
    check_alternating_identity,
    check_coeff_pair_inequality,
    check_coeff_positivity,
    check_weighted_pair_inequality,
    weighted_pair_value,
)
from janostab.janowski import JanowskiParams, coeff_recurrence
from janostab.serialize import dumps

from oracles import alternating_sum_exact, literal_weighted_exact

POINT = GridSpec(A_values=(-0.5,), B_values=(-1.0,), lambda_values=(0.5,), n_max=2, m_max=1)


class TestGridSpec:
    def test_default_lattice_shape(self):
        grid = GridSpec.default(n_max=10, m_max=5)
        assert len(grid.A_values) == 21
        assert len(grid.lambda_values) == 20
        assert grid.A_values[0] == -1.0 and grid.A_values[-1] == 0.0
        pairs = {(p.A, p.B) for p in grid.iter_params()}
        assert len(pairs) == 210

    def test_widened_lattice(self):
        grid = GridSpec.default(n_max=5, allow_positive_A=True)
        assert grid.A_values[-1] == 1.0
        assert any(p.A > 0 for p in grid.iter_params())

    def test_pairs_respect_range(self):
        grid = GridSpec(
            A_values=(-0.5, 0.5), B_values=(-1.0, -0.2, 0.8), lambda_values=(0.5,),
            n_max=3,
        )
        kept = {(p.A, p.B) for p in grid.iter_params()}
        assert kept == {(-0.5, -1.0)}  # positive A dropped without the flag

    def test_rejects_bad_lambda(self):
        with pytest.raises(ValueError):
            GridSpec(A_values=(-0.5,), B_values=(-1.0,), lambda_values=(0.0,), n_max=3)


class TestPositivity:
    def test_single_point_margin(self):
        report = check_coeff_positivity(POINT)
        assert report.passed
        assert report.checked == 3
        assert report.min_margin == pytest.approx(0.21875, abs=1e-15)

    def test_zero_order_grid_sees_only_a0(self):
        grid = GridSpec(A_values=(-0.3,), B_values=(-0.9,), lambda_values=(0.7,), n_max=0)
        report = check_coeff_positivity(grid)
        assert report.checked == 1 and report.min_margin == 1.0

    def test_detects_negative_coefficients_outside_range(self):
        grid = GridSpec(
            A_values=(1.0,), B_values=(0.5,), lambda_values=(0.5,),
            n_max=4, allow_positive_A=True,
        )
        report = check_coeff_positivity(grid)
        assert not report.passed
        assert report.min_margin < 0


class TestAlternatingIdentity:
    def test_lam_one_first_order_exact(self):
        report = check_alternating_identity(1.0, 1)
        assert report.min_margin == 0.0 and report.passed

    def test_small_order(self):
        report = check_alternating_identity(0.7, 3)
        assert report.passed
        assert report.min_margin > -1e-15

    def test_hundred_orders(self):
        report = check_alternating_identity(0.3, 100)
        assert report.passed
        assert report.min_margin > -1e-12
        assert report.checked == 100

    def test_oracle_agrees_the_sum_is_zero(self):
        assert alternating_sum_exact(Fraction(7, 10), 5) == 0

    def test_rejects_bad_lambda(self):
        with pytest.raises(ValueError):
            check_alternating_identity(0.0, 10)


class TestPairInequality:
    def test_single_point_value(self):
        report = check_coeff_pair_inequality(POINT)
        assert report.passed
        assert report.checked == 1  # n = 1 only for n_max = 2
        assert report.min_margin == pytest.approx(0.1875, abs=1e-15)

    def test_equal_coefficients_shape(self):
        # with a_{n+1} == a_n and B = -1 the value collapses to a_n > 0
        a = 0.37
        n = 5
        assert (n + 1) * a + (-1.0) * n * a == pytest.approx(a)


class TestWeightedPairInequality:
    def test_single_point_hand_value(self):
        got = weighted_pair_value(JanowskiParams(-0.5, -1.0, 0.5), 1, 1)
        assert got == pytest.approx(4 * 0.21875 - 0.25, abs=1e-15)

    def test_m_zero_collapse(self):
        params = JanowskiParams(-0.3, -0.8, 0.6)
        a = coeff_recurrence(params, 8).values
        for n in (1, 4, 7):
            assert weighted_pair_value(params, 0, n) == pytest.approx(
                (n + 1) * a[n + 1], abs=1e-15
            )

    def test_grid_minimum_comes_from_m_zero_row(self):
        report = check_weighted_pair_inequality(POINT)
        assert report.passed
        assert report.min_margin == pytest.approx(2 * 0.21875, abs=1e-15)

    def test_statement_literal_variant_matches_rational_oracle(self):
        got = weighted_pair_value(JanowskiParams(-0.5, -1.0, 0.5), 1, 1, literal_b_powers=True)
        exact = literal_weighted_exact(Fraction(-1, 2), Fraction(-1), Fraction(1, 2), 1, 1)
        assert exact == Fraction(21, 8)
        assert got == pytest.approx(float(exact), abs=1e-14)

    @settings(deadline=None, max_examples=40)
    @given(
        st.floats(-0.95, -0.05, allow_nan=False),
        st.floats(0.01, 0.9, allow_nan=False),
        st.floats(0.05, 1.0, allow_nan=False),
        st.integers(0, 6),
        st.integers(1, 9),
    )
    def test_decomposition_identity(self, a, gap, lam, m, n):
        b = max(a - gap, -1.0)
        if not b < a:
            return
        params = JanowskiParams(a, b, lam)
        coeffs = coeff_recurrence(params, n + 1).values
        pair = (n + 1) * coeffs[n + 1] + params.B * n * coeffs[n]
        rebuilt = m * pair + (n + 1) * coeffs[n + 1]
        assert weighted_pair_value(params, m, n) == pytest.approx(rebuilt, abs=1e-12)

    def test_pass_is_implied_by_pair_and_positivity(self):
        grid = GridSpec(
            A_values=(-0.7, -0.2), B_values=(-1.0, -0.8), lambda_values=(0.3, 0.9),
            n_max=40, m_max=20,
        )
        assert check_coeff_positivity(grid).passed
        assert check_coeff_pair_inequality(grid).passed
        assert check_weighted_pair_inequality(grid).passed


class TestReports:
    def test_deterministic_bytes(self):
        grid = GridSpec(
            A_values=(-0.6, -0.1), B_values=(-0.9,), lambda_values=(0.25, 0.75),
            n_max=25, m_max=10,
        )
        first = dumps(check_weighted_pair_inequality(grid).to_json_dict())
        second = dumps(check_weighted_pair_inequality(grid).to_json_dict())
        assert first == second

    def test_violation_schema(self):
        grid = GridSpec(
            A_values=(1.0,), B_values=(0.5,), lambda_values=(0.5,),
            n_max=4, allow_positive_A=True,
        )
        report = check_coeff_positivity(grid)
        doc = report.to_json_dict()
        assert set(doc) == {"checked", "violations", "min_margin"}
        assert doc["violations"], "expected violations outside the proven range"
        assert set(doc["violations"][0]) == {"A", "B", "lambda", "n", "m", "value"}
