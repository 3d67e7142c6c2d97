"""Tests for the slope recursions and membership predicates."""

from fractions import Fraction as F

import pytest

from steinerlab.linalg import RandomSource
from steinerlab.slopes import (
    INFINITY,
    compare_ratio_limit,
    compare_slope_limit,
    exceptional_slopes,
    fibonacci_table,
    is_balanced_ratio,
    is_balanced_ratio_orbit,
    is_semistable_slope,
    ratio_step,
    slope_step,
)

GOLDEN_PLANE_SLOPES = [F(0), F(1, 2), F(3, 5), F(8, 13), F(21, 34), F(55, 89)]


def test_slope_step_values():
    assert slope_step(2, F(0)) == F(1, 2)
    assert slope_step(2, F(1, 2)) == F(3, 5)
    assert slope_step(3, F(0)) == F(1, 3)


def test_slope_step_rejects_bad_input():
    with pytest.raises(ValueError):
        slope_step(2, F(-1, 2))
    with pytest.raises(ValueError):
        slope_step(2, INFINITY)


def test_exceptional_slopes_plane():
    assert exceptional_slopes(2, 6) == GOLDEN_PLANE_SLOPES
    assert exceptional_slopes(2, 1) == [F(0)]


def test_exceptional_slopes_dimension_three():
    # cross-checked against the ladder table below; the third value is
    # 4/11, sitting just under the limit (sqrt(3) - 1)/2 ~ 0.3660
    assert exceptional_slopes(3, 3) == [F(0), F(1, 3), F(4, 11)]


@pytest.mark.parametrize("n_dim", [2, 3, 4, 5])
def test_exceptional_slopes_increasing_and_below_limit(n_dim):
    slopes = exceptional_slopes(n_dim, 10)
    assert all(a < b for a, b in zip(slopes, slopes[1:]))
    assert all(compare_slope_limit(n_dim, q) == -1 for q in slopes)


def test_compare_slope_limit_signs():
    assert compare_slope_limit(2, F(2, 3)) == 1
    assert compare_slope_limit(2, F(55, 89)) == -1
    assert compare_slope_limit(2, F(0)) == -1


def test_is_semistable_slope_examples():
    assert not is_semistable_slope(2, F(2, 5))
    assert is_semistable_slope(2, F(8, 13))
    assert is_semistable_slope(2, F(1))


def test_is_semistable_slope_exhaustive_small_denominators():
    # every membership with denominator <= 89 must come from the six
    # golden slopes or from lying above the limit
    golden = set(GOLDEN_PLANE_SLOPES)
    for den in range(1, 90):
        for num in range(0, 2 * den + 1):
            q = F(num, den)
            if q.denominator > 89:
                continue
            expected = q in golden or compare_slope_limit(2, q) > 0
            assert is_semistable_slope(2, q) == expected


def test_ratio_step_values():
    assert ratio_step(3, INFINITY) == F(3)
    assert ratio_step(3, F(3)) == F(8, 3)
    assert ratio_step(2, F(1)) == F(1)  # fixed point of the plane recursion


def test_ratio_step_rejects_zero():
    with pytest.raises(ValueError):
        ratio_step(3, F(0))


def test_is_balanced_ratio_examples():
    assert is_balanced_ratio(3, F(8, 3))
    assert not is_balanced_ratio(3, F(11, 4))
    assert is_balanced_ratio(3, F(5, 2))
    assert is_balanced_ratio(3, INFINITY)


def test_is_balanced_ratio_domain():
    for bad in (F(1), F(1, 2), F(0)):
        with pytest.raises(ValueError):
            is_balanced_ratio(3, bad)
        with pytest.raises(ValueError):
            is_balanced_ratio_orbit(3, bad)


def test_is_balanced_ratio_n2_is_the_orbit():
    # for the plane case the interval is empty and members are (m+1)/m
    assert is_balanced_ratio(2, F(3, 2))
    assert is_balanced_ratio_orbit(2, F(3, 2))
    assert not is_balanced_ratio(2, F(7, 5))
    assert not is_balanced_ratio_orbit(2, F(7, 5))
    assert is_balanced_ratio(2, F(100, 99))


@pytest.mark.parametrize("n_dim", [3, 4, 5])
def test_dual_ratio_membership_agrees(n_dim):
    rng = RandomSource(99).derive(n_dim)
    for _ in range(300):
        den = rng.below(50) + 1
        num = rng.below(n_dim * den - den) + den + 1
        q = F(num, den)
        assert is_balanced_ratio(n_dim, q) == is_balanced_ratio_orbit(n_dim, q), q


def test_ratio_orbit_members_agree_between_routes():
    t = INFINITY
    for _ in range(12):
        t = ratio_step(4, t)
        assert is_balanced_ratio(4, t)
        assert is_balanced_ratio_orbit(4, t)


def test_compare_ratio_limit_signs():
    assert compare_ratio_limit(3, F(11, 4)) == 1
    assert compare_ratio_limit(3, F(5, 2)) == -1


def test_fibonacci_tables():
    assert fibonacci_table(2, 4).values == (0, 1, 3, 8, 21, 55)
    assert fibonacci_table(3, 2).values == (0, 1, 4, 15)


def test_fibonacci_slope_zero_at_base():
    table = fibonacci_table(5, 1)
    assert table.slope(0) == 0


@pytest.mark.parametrize("n_dim", [2, 3, 4])
def test_fibonacci_slopes_match_recursion(n_dim):
    table = fibonacci_table(n_dim, 9)
    for n in range(1, 9):
        assert table.slope(n) == slope_step(n_dim, table.slope(n - 1))
    assert [table.slope(n) for n in range(9)] == exceptional_slopes(n_dim, 9)


def test_fibonacci_values_increase():
    vals = fibonacci_table(2, 10).values
    assert all(a < b for a, b in zip(vals[1:], vals[2:]))


def test_integer_ladder_base_case():
    # ambient dimension 1: the semistable slopes degenerate to integers
    assert is_semistable_slope(1, F(3))
    assert not is_semistable_slope(1, F(7, 2))
