"""
Tests for Ehrhart fitting, the Smith-form index, saturated IP decisions and LR nonvanishing.
"""
import random
from fractions import Fraction

import pytest
from pydantic import ValidationError

from satpos.combinat import lr_coefficient
from satpos.errors import DimensionMismatch, EmptyPolytope, RelaxationTooSmall
from satpos.polytope import HPolytope, count_lattice_points, dilate
from satpos.satip import (
    SaturatedIPInstance,
    Verdict,
    affine_span_has_integer_point,
    brute_force_index,
    check_index,
    ehrhart_index,
    ehrhart_quasipoly,
    ehrhart_samples,
    lr_nonvanishing,
    random_lr_triple,
    random_polytope,
    robust_obstruction_check,
    saturated_ip_decide,
    saturation_profile,
)

HALF_POINT = HPolytope.from_rows(1, [([2], "eq", 1)])
UNIT_INTERVAL = HPolytope.box([0], [1])
MIDDLE_THIRD = HPolytope.from_rows(1, [([1], "ge", "1/3"), ([1], "le", "2/3")])
EMPTY = HPolytope.from_rows(1, [([1], "ge", 1), ([1], "le", 0)])


# ---------------------------------------------------------------------------
# Ehrhart quasi-polynomials and the index
# ---------------------------------------------------------------------------

def test_ehrhart_samples():
    assert ehrhart_samples(UNIT_INTERVAL, 4) == [2, 3, 4, 5]
    assert ehrhart_samples(HALF_POINT, 4) == [0, 1, 0, 1]


def test_ehrhart_quasipoly_of_half_point():
    f = ehrhart_quasipoly(HALF_POINT, period_bound=2)
    assert f.period == 2
    assert f.constituents[0].is_zero
    assert f.constituents[1].coefficients == (Fraction(1),)


def test_ehrhart_quasipoly_of_square():
    f = ehrhart_quasipoly(HPolytope.box([0, 0], [1, 1]), period_bound=1)
    assert f.period == 1
    assert f.constituents[0].coefficients == (1, 2, 1)


def test_ehrhart_index_examples():
    assert ehrhart_index(HALF_POINT) == 2
    assert ehrhart_index(UNIT_INTERVAL) == 1
    assert ehrhart_index(EMPTY) == 0
    plane = HPolytope.from_rows(2, [([2, 4], "eq", 3), ([1, 0], "ge", 0), ([1, 0], "le", 2)])
    assert ehrhart_index(plane) == 2
    third = HPolytope.from_rows(2, [([3, 0], "eq", 1), ([0, 1], "ge", 0), ([0, 1], "le", 1)])
    assert ehrhart_index(third) == 3


def test_affine_span_integer_point():
    assert affine_span_has_integer_point(UNIT_INTERVAL)
    assert not affine_span_has_integer_point(HALF_POINT)
    with pytest.raises(EmptyPolytope):
        affine_span_has_integer_point(EMPTY)


def test_brute_force_index():
    assert brute_force_index([0, 1, 0, 1]) == 2
    assert brute_force_index([0, 0, 0]) == 0
    assert brute_force_index([0, 3, 5]) == 1


def test_random_index_agreement():
    for seed in range(20):
        P = random_polytope(random.Random(seed), max_dim=3)
        result = check_index(P, 8)
        if result.determinate:
            assert result.agrees is True, f"seed {seed}: index {result.index}, brute force {result.brute_force}"
        else:
            assert result.agrees is None
            assert result.consistent
        assert result.dilation_identity


@pytest.mark.slow
def test_random_index_agreement_full_horizon():
    for seed in range(200):
        result = check_index(random_polytope(random.Random(seed)), 24)
        assert result.determinate, f"seed {seed}"
        assert result.agrees is True, f"seed {seed}: index {result.index}, brute force {result.brute_force}"
        assert result.dilation_identity


def test_index_check_reports_indeterminate_comparisons():
    # only n = 2 is a multiple of the index 2 within the horizon
    result = check_index(HALF_POINT, 3)
    assert result.index == 2
    assert not result.determinate
    assert result.agrees is None
    assert result.consistent


# ---------------------------------------------------------------------------
# Saturation profiles and saturated IP
# ---------------------------------------------------------------------------

def test_saturation_profile_of_middle_third():
    profile = saturation_profile(MIDDLE_THIRD, period_bound=3, degree_bound=1)
    f = profile.quasipolynomial
    assert f.period == 3
    assert f.constituents[0].coefficients == (Fraction(-1, 3), Fraction(1, 3))
    assert f.constituents[1].coefficients == (Fraction(1, 3), Fraction(1, 3))
    assert f.constituents[2].coefficients == (Fraction(1), Fraction(1, 3))
    assert profile.saturation_index == 1
    assert profile.positivity_index == 1
    assert profile.index == 1
    assert profile.ehrhart_index == 1


def test_saturation_profile_of_half_point():
    profile = saturation_profile(HALF_POINT, period_bound=2)
    assert profile.index == 2
    assert profile.ehrhart_index == 2
    assert profile.saturation_index == 0


def test_saturated_ip_decide():
    inst = SaturatedIPInstance(P=HALF_POINT, sie=0)
    assert saturated_ip_decide(inst, 2)
    assert not saturated_ip_decide(inst, 3)
    assert saturated_ip_decide(inst, 4)
    with pytest.raises(RelaxationTooSmall):
        saturated_ip_decide(inst, 0)
    assert not saturated_ip_decide(SaturatedIPInstance(P=EMPTY, pie=1), 5)


def test_saturated_ip_instance_needs_one_estimate():
    with pytest.raises(ValidationError):
        SaturatedIPInstance(P=HALF_POINT)
    with pytest.raises(ValidationError):
        SaturatedIPInstance(P=HALF_POINT, sie=1, pie=1)
    with pytest.raises(ValidationError):
        SaturatedIPInstance(P=HALF_POINT, sie=-1)


# ---------------------------------------------------------------------------
# LR nonvanishing and obstructions
# ---------------------------------------------------------------------------

def test_lr_nonvanishing_examples():
    assert lr_nonvanishing((2, 1), (2, 1), (3, 2, 1))
    assert not lr_nonvanishing((1,), (1,), (3,))
    assert not lr_nonvanishing((2,), (2,), (1, 1, 1, 1))
    assert lr_nonvanishing(["1", "1/2"], ["1", "1/2"], ["3/2", "3/2"])


def test_lr_nonvanishing_matches_lr_rule():
    for seed in range(20):
        alpha, beta, lam = random_lr_triple(random.Random(seed), 6)
        assert lr_nonvanishing(alpha, beta, lam) == (lr_coefficient(alpha, beta, lam) > 0)


def test_robust_obstruction_check():
    assert robust_obstruction_check(UNIT_INTERVAL, HALF_POINT) == Verdict.MODULAR
    assert robust_obstruction_check(UNIT_INTERVAL, EMPTY) == Verdict.GEOMETRIC
    assert robust_obstruction_check(UNIT_INTERVAL, MIDDLE_THIRD) == Verdict.NONE
    assert robust_obstruction_check(EMPTY, EMPTY) == Verdict.NONE


def test_lr_nonvanishing_size_mismatch_is_false():
    assert not lr_nonvanishing((2,), (1,), (2,))
    assert not lr_nonvanishing(["1"], ["1/2"], ["1"])
    with pytest.raises(DimensionMismatch):
        lr_nonvanishing(["1", "1/2"], ["1"], ["2", "1/2"], n=1)


def test_lr_nonvanishing_is_stable_under_doubling():
    for seed in range(100):
        alpha, beta, lam = random_lr_triple(random.Random(seed), 6)
        doubled = [tuple(2 * v for v in p) for p in (alpha, beta, lam)]
        assert (lr_coefficient(alpha, beta, lam) != 0) == (lr_coefficient(*doubled) != 0), f"seed {seed}"


# ---------------------------------------------------------------------------
# Saturated IP against direct counts
# ---------------------------------------------------------------------------

def _small_polytope(rng: random.Random) -> HPolytope:
    dim = rng.randint(1, 2)
    if dim == 1 and rng.random() < 0.3:
        return HPolytope.from_rows(1, [([rng.randint(1, 4)], "eq", rng.randint(1, 5))])
    lo = [Fraction(rng.randint(0, 6), rng.randint(1, 3)) for _ in range(dim)]
    hi = [v + Fraction(rng.randint(1, 4), rng.randint(1, 3)) for v in lo]
    return HPolytope.box(lo, hi)


def test_saturated_ip_decide_matches_direct_counts():
    for seed in range(30):
        P = _small_polytope(random.Random(seed))
        profile = saturation_profile(P, period_bound=6, degree_bound=P.dim, cap=20)
        sie = profile.saturation_index
        assert sie is not None, f"seed {seed}"
        inst = SaturatedIPInstance(P=P, sie=sie)
        for c in range(sie + 1, sie + 21):
            expected = count_lattice_points(dilate(P, c)) > 0
            assert saturated_ip_decide(inst, c) == expected, f"seed {seed}, c {c}"
