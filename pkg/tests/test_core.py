"""Tests for the exact sequence recurrences and the series-based s-table."""

from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from romik import (
    IntegrityError,
    RationalSeries,
    SequenceCache,
    odd_product_squared,
    s_table_by_series,
    theta_series,
)

# Published initial segments.
U_VALUES = [1, 6, 256, 28560, 6071040]
V_VALUES = [1, 1, 47, 7395, 2453425, 1399055625]
D_VALUES = [1, 1, -1, 51, 849, -26199, 1341999, 82018251, 18703396449]


class TestOddProductSquared:
    def test_single_factor(self):
        assert odd_product_squared(1, 3) == 9

    def test_two_factors(self):
        assert odd_product_squared(2, 3) == 441  # (3*7)^2
        assert odd_product_squared(2, 1) == 25  # (1*5)^2

    def test_empty_product(self):
        assert odd_product_squared(0, 1) == 1
        assert odd_product_squared(0, 3) == 1

    def test_rejects_bad_offset(self):
        with pytest.raises(ValueError):
            odd_product_squared(2, 2)

    def test_rejects_negative_n(self):
        with pytest.raises(ValueError):
            odd_product_squared(-1, 1)


class TestSequences:
    def test_u_golden(self, cache):
        assert [cache.u(n) for n in range(5)] == U_VALUES

    def test_v_golden(self, cache):
        assert [cache.v(n) for n in range(6)] == V_VALUES

    def test_d_golden(self, cache):
        assert [cache.d(n) for n in range(9)] == D_VALUES

    def test_seeds(self):
        c = SequenceCache()
        assert c.u(0) == c.v(0) == c.d(0) == 1

    def test_d_values_all_odd(self, cache):
        assert all(cache.d(n) & 1 for n in range(26))

    def test_negative_index_rejected(self, cache):
        for f in (cache.u, cache.v, cache.d):
            with pytest.raises(ValueError):
                f(-1)

    def test_cold_cache_recomputation_is_identical(self, cache):
        fresh = SequenceCache()
        fresh.build_s_table(12)
        fresh.u(12)
        fresh.d(12)
        assert fresh.known_values("u") == cache.known_values("u")[:13]
        assert fresh.known_values("v") == cache.known_values("v")[:13]
        assert fresh.known_values("d") == cache.known_values("d")[:13]
        assert fresh.known_s_rows() == cache.known_s_rows()[:12]


class TestSTable:
    def test_spec_values(self, cache):
        assert cache.s(1, 1) == 1
        assert cache.s(2, 1) == 24
        assert cache.s(3, 2) == 120
        assert cache.s(3, 1) == 1896

    def test_r_values(self, cache):
        assert cache.r(2, 1) == 48
        assert cache.r(3, 1) == 7584

    def test_diagonal_is_one(self, cache):
        assert all(cache.s(n, n) == 1 for n in range(1, 26))
        assert all(cache.r(n, n) == 1 for n in range(1, 26))

    def test_r_even_below_diagonal(self, cache):
        for n in range(2, 15):
            for k in range(1, n):
                assert cache.r(n, k) % 2 == 0

    def test_rejects_out_of_range(self, cache):
        with pytest.raises(ValueError):
            cache.s(3, 4)
        with pytest.raises(ValueError):
            cache.s(3, 0)

    def test_d_consistent_with_table(self, cache):
        # d(2) = v(2) - r(2,1) d(1) and d(3) = v(3) - r(3,1) d(1) - r(3,2) d(2)
        assert cache.d(2) == 47 - 48 * 1 == -1
        assert cache.d(3) == 7395 - 7584 * 1 - 240 * (-1) == 51

    def test_matches_rational_reference_path(self, cache):
        assert s_table_by_series(20, cache) == cache.known_s_rows()[:20]

    def test_incremental_growth_matches_bulk(self, cache):
        grown = SequenceCache()
        for n in (3, 9, 17):
            grown.build_s_table(n)
        assert grown.known_s_rows() == cache.known_s_rows()[:17]


class TestThetaSeries:
    def test_order_one(self, cache):
        assert theta_series(1, cache).coefficients == [0, 1]

    def test_order_three(self, cache):
        assert theta_series(3, cache).coefficients == [0, 1, 0, 1]

    def test_fifth_coefficient(self, cache):
        assert theta_series(5, cache).coefficient(5) == Fraction(32, 15)

    def test_even_coefficients_vanish(self, cache):
        series = theta_series(12, cache)
        assert all(series.coefficient(m) == 0 for m in range(0, 13, 2))

    def test_general_coefficient(self, cache):
        series = theta_series(9, cache)
        for j in range(5):
            assert series.coefficient(2 * j + 1) == Fraction(
                cache.u(j), factorial(2 * j + 1)
            )

    def test_order_zero_rejected(self, cache):
        with pytest.raises(ValueError):
            theta_series(0, cache)


class TestRationalSeries:
    def test_mul_truncates_at_smaller_order(self):
        a = RationalSeries([Fraction(1), Fraction(1), Fraction(1)], 2)
        b = RationalSeries([Fraction(1), Fraction(1)], 1)
        prod = a * b
        assert prod.truncation_order == 1
        assert prod.coefficients == [Fraction(1), Fraction(2)]

    def test_add(self):
        a = RationalSeries([Fraction(1, 2), Fraction(1, 3)], 1)
        b = RationalSeries([Fraction(1, 2), Fraction(2, 3)], 1)
        assert (a + b).coefficients == [Fraction(1), Fraction(1)]

    def test_exact_equality(self):
        a = RationalSeries([Fraction(2, 4)], 0)
        b = RationalSeries([Fraction(1, 2)], 0)
        assert a == b

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            RationalSeries([Fraction(1)], 3)

    def test_coefficient_out_of_range(self):
        series = RationalSeries([Fraction(1), Fraction(0)], 1)
        with pytest.raises(IndexError):
            series.coefficient(2)


class TestInvariants:
    @given(st.integers(min_value=1, max_value=300))
    def test_even_binomial_halving_identity(self, n):
        # sum over even lower indices of C(2n, .) is half of 2^(2n)
        assert sum(comb(2 * n, 2 * m) for m in range(n + 1)) == 1 << (2 * n - 1)

    def test_v_halved_sum_is_exact(self):
        # the even-sum integrity check never fires on genuine input
        c = SequenceCache()
        assert c.v(20) % 2 == 1

    def test_integrity_error_is_arithmetic_error(self):
        assert issubclass(IntegrityError, ArithmeticError)
