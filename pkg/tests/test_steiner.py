"""Tests for presentation restriction, splitting types, and interpolation."""

from fractions import Fraction as F

import pytest

from steinerlab.linalg import DEFAULT_PRIME, DEFAULT_TRIALS, RandomSource
from steinerlab.slopes import exceptional_slopes
from steinerlab.steiner import (
    SplittingType,
    SteinerSpec,
    balanced_test,
    interpolation_test_cokernel,
    interpolation_test_kernel,
    matrix_iso_test,
    predicted_decomposition,
    pullback_splitting,
)

P = DEFAULT_PRIME
SEEDS = range(DEFAULT_TRIALS)


def test_spec_validation():
    with pytest.raises(ValueError):
        SteinerSpec(2, 1, 1, 1)  # rank 1 < N with s > 0
    with pytest.raises(ValueError):
        SteinerSpec(1, 1, 2, 1)
    spec = SteinerSpec(2, 3, 5, 2, seed=1)
    assert spec.slope == F(3, 5)
    assert spec.rank == 10
    assert spec.c1 == 30


def test_splitting_type_validation():
    with pytest.raises(ValueError):
        SplittingType((1, 2))  # increasing
    with pytest.raises(ValueError):
        SplittingType((2, -1))
    assert SplittingType((3, 3)).is_balanced()
    assert not SplittingType((3, 2)).is_balanced()


def test_matrix_iso_examples():
    assert any(matrix_iso_test(3, 1, 3, 1, RandomSource(s), P) for s in SEEDS)
    assert any(matrix_iso_test(3, 3, 8, 1, RandomSource(s), P) for s in SEEDS)
    assert not any(matrix_iso_test(3, 4, 11, 1, RandomSource(s), P) for s in SEEDS)


def test_matrix_iso_validation():
    with pytest.raises(ValueError):
        matrix_iso_test(3, 3, 2, 1, RandomSource(0), P)
    with pytest.raises(ValueError):
        matrix_iso_test(3, 50, 51, 100, RandomSource(0), P)  # guard


def test_pullback_splitting_balanced_examples():
    assert pullback_splitting(SteinerSpec(2, 1, 2, 1, seed=0), P).parts == (1, 1)
    assert pullback_splitting(SteinerSpec(2, 3, 5, 1, seed=0), P).parts == (3,) * 5


def test_pullback_splitting_unbalanced_example():
    # decomposes as one trivial summand plus two copies of the first
    # ladder bundle, so the degree-5 restriction has a degree-0 part
    split = pullback_splitting(SteinerSpec(2, 2, 5, 1, seed=0), P)
    assert min(split.parts) == 0
    assert split.parts == (3, 3, 2, 2, 0)


@pytest.mark.parametrize(
    "spec",
    [
        SteinerSpec(2, 1, 2, 1, seed=0),
        SteinerSpec(2, 2, 5, 1, seed=1),
        SteinerSpec(2, 3, 5, 1, seed=2),
        SteinerSpec(2, 1, 2, 2, seed=3),
        SteinerSpec(3, 1, 3, 1, seed=4),
        SteinerSpec(2, 0, 4, 2, seed=5),
    ],
)
def test_splitting_invariants_and_balanced_consistency(spec):
    split = pullback_splitting(spec, P)
    assert len(split.parts) == spec.rank
    assert split.total == spec.c1
    balanced_by_parts = split.parts == (spec.s,) * spec.rank
    assert balanced_test(spec, P) == balanced_by_parts


def test_trivial_presentation_splits_trivially():
    split = pullback_splitting(SteinerSpec(2, 0, 3, 2, seed=9), P)
    assert split.parts == (0,) * 6
    assert balanced_test(SteinerSpec(2, 0, 3, 2, seed=9), P)


def test_restriction_to_a_line():
    # r = 1 with rank from k: the curve is a line and entries span the
    # whole degree-1 space; slope 1 restricts balanced
    spec = SteinerSpec(2, 1, 1, 2, seed=0)
    assert pullback_splitting(spec, P).parts == (1, 1)
    assert balanced_test(spec, P)


def test_balanced_equals_matrix_iso_on_matched_seeds():
    for seed in SEEDS:
        spec = SteinerSpec(2, 2, 5, 1, seed=seed)
        assert balanced_test(spec, P) == matrix_iso_test(3, 2, 7, 1, RandomSource(seed), P)
        spec = SteinerSpec(2, 3, 5, 1, seed=seed)
        assert balanced_test(spec, P) == matrix_iso_test(3, 3, 8, 1, RandomSource(seed), P)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_exceptional_slope_balanced_for_small_multiplicities(k):
    assert any(balanced_test(SteinerSpec(2, 1, 2, k, seed=s), P) for s in SEEDS)


@pytest.mark.parametrize("k", [1, 2])
def test_unstable_slope_never_balanced(k):
    assert not any(balanced_test(SteinerSpec(2, 2, 5, k, seed=s), P) for s in SEEDS)


def test_predicted_decomposition_examples():
    d = predicted_decomposition(2, 2, 5, 1)
    assert (d.n, d.k1, d.k2) == (0, 1, 2)
    d = predicted_decomposition(2, 1, 2, 1)
    assert (d.n, d.k1, d.k2) == (1, 1, 0)
    d = predicted_decomposition(2, 5, 11, 1)
    assert (d.n, d.k1, d.k2) == (0, 1, 5)


def test_predicted_decomposition_rejects_high_slope():
    with pytest.raises(ValueError):
        predicted_decomposition(2, 2, 3, 1)  # 2/3 above the limit


@pytest.mark.parametrize("n_dim", [2, 3])
def test_predicted_decomposition_constraints(n_dim):
    from steinerlab.slopes import fibonacci_table

    table = fibonacci_table(n_dim, 8)
    rng = RandomSource(31)
    found = 0
    while found < 25:
        r = rng.below(40) + 2
        s = rng.below(r)
        k = rng.below(3) + 1
        try:
            d = predicted_decomposition(n_dim, s, r, k)
        except ValueError:
            continue
        found += 1
        assert d.k1 * table.rank(d.n) + d.k2 * table.rank(d.n + 1) == k * r
        assert d.k1 * table.c1(d.n) + d.k2 * table.c1(d.n + 1) == k * s
        assert table.slope(d.n) <= F(s, r) < table.slope(d.n + 1)


def test_exceptional_slope_is_pure_ladder_bundle():
    # an exceptional slope sits at the left window edge: k2 = 0 and the
    # presentation is a multiple of a single ladder bundle
    for n, q in enumerate(exceptional_slopes(2, 5)[1:4], start=1):
        d = predicted_decomposition(2, q.numerator, q.denominator, 1)
        assert (d.n, d.k2) == (n, 0)


def test_interpolation_cokernel_examples():
    assert interpolation_test_cokernel(2, 0, 1, RandomSource(0), P)
    assert interpolation_test_cokernel(5, 3, 1, RandomSource(0), P)
    assert not any(interpolation_test_cokernel(3, 1, 1, RandomSource(s), P) for s in SEEDS)


def test_interpolation_cokernel_validation():
    with pytest.raises(ValueError):
        interpolation_test_cokernel(1, 0, 1, RandomSource(0), P)


def test_interpolation_kernel_examples():
    # ratio 1/4 and 1/5 cases fail; the exceptional 1/2 case succeeds
    assert not any(interpolation_test_kernel(2, 2, 1, RandomSource(s), P) for s in SEEDS)
    assert not any(interpolation_test_kernel(3, 3, 1, RandomSource(s), P) for s in SEEDS)
    assert any(interpolation_test_kernel(2, 1, 1, RandomSource(s), P) for s in SEEDS)


def test_interpolation_kernel_relation_free_edge():
    # s = r + 1 has no relations: the sections are a twist of a trivial
    # bundle and interpolation reduces to a full-space vanishing count
    assert interpolation_test_kernel(2, 3, 1, RandomSource(0), P)


def test_interpolation_kernel_validation():
    with pytest.raises(ValueError):
        interpolation_test_kernel(2, 0, 1, RandomSource(0), P)
    with pytest.raises(ValueError):
        interpolation_test_kernel(2, 4, 1, RandomSource(0), P)


def test_determinism_of_trials():
    a = pullback_splitting(SteinerSpec(2, 2, 5, 1, seed=7), P)
    b = pullback_splitting(SteinerSpec(2, 2, 5, 1, seed=7), P)
    assert a == b
    x = interpolation_test_cokernel(3, 1, 1, RandomSource(3), P)
    y = interpolation_test_cokernel(3, 1, 1, RandomSource(3), P)
    assert x == y
