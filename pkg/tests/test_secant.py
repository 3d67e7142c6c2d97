"""Tests for the secant-class formula and the existence trichotomy."""

import pytest

from steinerlab.linalg import RandomSource
from steinerlab.secant import (
    GUARANTEED,
    INVALID,
    NOT_EXPECTED,
    CohomologyClass,
    SecantParams,
    existence_check,
    general_binomial,
    hilbert_bridge,
    secant_class,
    secant_class_rank_one,
    weight_factor,
)

ELLIPTIC_QUARTIC = SecantParams(n=4, g=1, s=3, d=3, r=1)


def test_derived_quantities():
    assert ELLIPTIC_QUARTIC.k == 2
    assert ELLIPTIC_QUARTIC.delta == 0


def test_existence_trichotomy():
    # a degree-4 genus-1 space curve has no trisecant lines: the naive
    # two-hypothesis version would wrongly promise them
    assert existence_check(ELLIPTIC_QUARTIC) == NOT_EXPECTED
    assert existence_check(hilbert_bridge(5, 1)) == GUARANTEED
    assert existence_check(SecantParams(n=2, g=1, s=3, d=3, r=1)) == INVALID  # delta < 0
    assert existence_check(SecantParams(n=9, g=1, s=5, d=3, r=2)) == INVALID  # rk > d


def test_general_binomial():
    assert general_binomial(0, 1) == 0
    assert general_binomial(5, -1) == 0
    assert general_binomial(5, 0) == 1
    assert general_binomial(5, 2) == 10
    assert general_binomial(-3, 2) == 6  # (-3)(-4)/2


def test_weight_factor_examples():
    assert weight_factor(1, 2, 0, 1, 1) == 0
    assert weight_factor(1, 2, 0, 1, 2) == 1
    # negative lower index in the binomial part
    assert weight_factor(1, 2, 1, 1, 3) == 0  # r + i - beta = -1
    with pytest.raises(ValueError):
        weight_factor(1, 2, 0, 1, 4)


def test_elliptic_quartic_class_is_zero():
    cls = secant_class(ELLIPTIC_QUARTIC)
    assert cls.is_zero
    assert cls.total_degree == 2


def test_rank_one_closed_form_example():
    # one failing condition on a pencil-like series: class x + theta
    params = SecantParams(n=4, g=2, s=1, d=2, r=1)
    assert params.k == 1 and params.delta == 1
    cls = secant_class(params)
    assert cls.coefficient(0) == 1 and cls.coefficient(1) == 1
    assert cls.coeffs == secant_class_rank_one(params).coeffs


def test_rank_one_closed_form_random_sweep():
    rng = RandomSource(5)
    checked = 0
    while checked < 60:
        r = rng.below(5)
        delta = rng.below(5)
        g = rng.below(8)
        d = r + rng.below(4)
        s = d - r
        n = delta + g + s
        params = SecantParams(n=n, g=g, s=s, d=d, r=r)
        if params.k != 1:
            continue
        checked += 1
        assert secant_class(params).coeffs == secant_class_rank_one(params).coeffs


def test_rank_zero_failure_index_gives_single_term():
    # with no failure index the sequence is forced and the class is a
    # single nonnegative number in degree 0
    params = SecantParams(n=7, g=2, s=3, d=2, r=0)
    assert params.k == 2 and params.delta == 2
    cls = secant_class(params)
    assert cls.total_degree == 0
    assert len(cls.coeffs) == 1
    j, c = cls.coeffs[0]
    assert j == 0 and c > 0


def test_nonnegativity_random():
    rng = RandomSource(6)
    for _ in range(60):
        r = rng.below(4)
        k = rng.below(3) + 1
        delta = rng.below(5)
        g = rng.below(7)
        d = r * k + rng.below(3)
        s = d + k - r - 1
        if s < 0:
            continue
        params = SecantParams(n=delta + g + s, g=g, s=s, d=d, r=r)
        assert all(c >= 0 for _, c in secant_class(params).coeffs)


def test_vanishing_in_excess_regime():
    rng = RandomSource(7)
    checked = 0
    while checked < 80:
        r = rng.below(4) + 1
        k = rng.below(3) + 1
        delta = rng.below(r)  # delta < r
        bound = (r - delta) * k
        if bound < 1:
            continue
        g = rng.below(bound)  # g < (r - delta) * k
        d = r * k + rng.below(3)
        s = d + k - r - 1
        if s < 0:
            continue
        params = SecantParams(n=delta + g + s, g=g, s=s, d=d, r=r)
        checked += 1
        assert secant_class(params).is_zero, params


def test_class_integrality_is_reported_not_assumed():
    fractional = secant_class(SecantParams(n=5, g=2, s=2, d=4, r=2))  # k = 1
    assert not fractional.is_integral
    integral = secant_class(SecantParams(n=8, g=0, s=2, d=4, r=2))
    assert integral.is_integral


def test_class_formatting():
    params = SecantParams(n=4, g=2, s=1, d=2, r=1)
    assert str(secant_class(params)) == "1*x + 1*theta"
    assert str(CohomologyClass.from_dict(2, 2, {})) == "0"


def test_secant_class_guards():
    with pytest.raises(ValueError):
        secant_class(SecantParams(n=2, g=1, s=3, d=3, r=1))  # delta < 0
    with pytest.raises(ValueError):
        secant_class(SecantParams(n=100, g=2, s=50, d=25, r=20))  # k + r > 40


def test_hilbert_bridge_contract():
    for r_h in range(3, 20):
        for s_h in range((r_h - 1) // 2 + 1):
            if 2 * s_h >= r_h:
                continue
            params = hilbert_bridge(r_h, s_h)
            assert params.k == 2
            assert params.delta == s_h
            assert existence_check(params) == GUARANTEED
    with pytest.raises(ValueError):
        hilbert_bridge(4, 2)


def test_bridge_example_values():
    params = hilbert_bridge(5, 1)
    assert (params.n, params.g, params.s, params.d, params.r) == (5, 0, 4, 4, 1)
