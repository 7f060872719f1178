"""
Tests for quasi-polynomials: fitting, index, shifts, saturation and positive forms.
"""
import random
from fractions import Fraction

import pytest
from pydantic import ValidationError

from satpos.errors import CapExceeded, InconsistentSamples, InsufficientSamples
from satpos.exact import RationalFunction, series_coefficients
from satpos.fixtures import FKRON1
from satpos.quasipoly import (
    PositiveForm,
    QuasiPolynomial,
    evaluate,
    fit,
    generating_function,
    index,
    is_positive,
    is_strictly_saturated,
    positive_form_search,
    positivity_index,
    saturated_by_form,
    saturation_index,
    shift,
)


def _alternating() -> QuasiPolynomial:
    # (n + 1)/2 for odd n, n/2 + 1 for even n
    return QuasiPolynomial(period=2, constituents=[["1/2", "1/2"], [1, "1/2"]])


def test_residue_convention():
    f = _alternating()
    assert evaluate(f, 1) == 1
    assert evaluate(f, 4) == 3
    assert f(3) == 2


def test_period_must_match_constituents():
    with pytest.raises(ValidationError):
        QuasiPolynomial(period=2, constituents=[[1]])


def test_fit_period_two():
    samples = [(1, 1), (2, 3), (3, 2), (4, 5), (5, 3), (6, 7)]
    f = fit(samples, period=2, degree=1)
    assert f.constituents[0].coefficients == (Fraction(1, 2), Fraction(1, 2))
    assert f.constituents[1].coefficients == (Fraction(1), Fraction(1))


def test_fit_rejects_inconsistent_samples():
    with pytest.raises(InconsistentSamples):
        fit([(n, n ** 3) for n in range(1, 6)], period=1, degree=2)


def test_fit_needs_enough_samples():
    with pytest.raises(InsufficientSamples):
        fit([(1, 1), (2, 4)], period=1, degree=2)


def test_minimal_period_collapses_equal_constituents():
    f = QuasiPolynomial(period=4, constituents=[[1, 1], [2], [1, 1], [2]])
    reduced = f.minimal_period()
    assert reduced.period == 2
    assert QuasiPolynomial(period=2, constituents=[[1], [1]]).minimal_period().period == 1


def test_index():
    assert index(QuasiPolynomial.zero()) == 0
    assert index(QuasiPolynomial.polynomial([0, 1])) == 1
    assert index(QuasiPolynomial(period=2, constituents=[[], [0, 1]])) == 2
    assert index(QuasiPolynomial(period=3, constituents=[[], [], [1]])) == 3


def test_shift():
    g = shift(_alternating(), 1)
    assert g.constituents[0].coefficients == (Fraction(3, 2), Fraction(1, 2))
    assert g.constituents[1].coefficients == (Fraction(1), Fraction(1, 2))
    for n in range(1, 10):
        assert g(n) == _alternating()(n + 1)


def test_saturation_and_positivity_indices():
    assert saturation_index(QuasiPolynomial.polynomial([0, 1]), cap=5) == 0
    assert saturation_index(QuasiPolynomial.polynomial([-1, 1]), cap=5) == 1
    assert positivity_index(QuasiPolynomial.polynomial([1, 0, 1]), cap=5) == 0
    assert positivity_index(QuasiPolynomial.polynomial([-1, 1]), cap=5) == 1
    # n^2 - 3n + 3 is positive on every integer but has a negative coefficient
    f = QuasiPolynomial.polynomial([3, -3, 1])
    assert is_strictly_saturated(f)
    assert not is_positive(f)
    assert saturation_index(f, cap=5) == 0
    assert positivity_index(f, cap=5) == 2


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        saturation_index(QuasiPolynomial.polynomial([-1]), cap=3)
    with pytest.raises(CapExceeded):
        positivity_index(QuasiPolynomial.polynomial([-1]), cap=3)


# ---------------------------------------------------------------------------
# Generating functions and positive forms
# ---------------------------------------------------------------------------

def test_generating_function_of_constant_and_identity():
    F = generating_function(QuasiPolynomial.polynomial([1]))
    assert F.numerator.coefficients == (Fraction(1),)
    assert F.denominator.coefficients == (Fraction(1), Fraction(-1))
    G = generating_function(QuasiPolynomial.polynomial([0, 1]))
    assert G.numerator.coefficients == (Fraction(0), Fraction(1))
    assert G.denominator.coefficients == (Fraction(1), Fraction(-2), Fraction(1))


def test_generating_function_series_matches_values():
    f = _alternating()
    series = series_coefficients(generating_function(f), 10)
    assert series[1:] == [f(n) for n in range(1, 11)]


def test_positive_form_search_two_part_partitions():
    F = RationalFunction.from_factors([1], [(1, 1), (2, 1)])
    form = positive_form_search(F, degree=1, max_a=2)
    assert form.numerator_h == (1,)
    assert form.denominator_factors == ((1, 1), (2, 1))
    assert form.modular_index == 2


def test_positive_form_search_polynomial():
    form = positive_form_search(RationalFunction.from_factors([1], [(1, 3)]), degree=2, max_a=1)
    assert form.numerator_h == (1,)
    assert form.denominator_factors == ((1, 3),)
    assert form.modular_index == 1


def test_positive_form_of_printed_kronecker_constituents():
    row = FKRON1[0]
    f = QuasiPolynomial(period=2, constituents=[row.odd, row.even])
    form = positive_form_search(generating_function(f), degree=2, max_a=2)
    assert form.numerator_h == (1, 8, 11, 2)
    assert form.denominator_factors == ((1, 2), (2, 1))


def test_positive_form_search_can_fail():
    assert positive_form_search(RationalFunction.from_factors([1], [(3, 1)]), degree=0, max_a=2) is None


def test_positive_form_validation():
    with pytest.raises(ValidationError):
        PositiveForm(numerator_h=(2, 1), denominator_factors=((1, 1),))
    with pytest.raises(ValidationError):
        PositiveForm(numerator_h=(1, -1), denominator_factors=((1, 1),))
    form = PositiveForm.from_document({"h": [1, 1], "den": [[1, 3]]})
    assert series_coefficients(form.to_rational_function(), 4) == [(n + 1) ** 2 for n in range(5)]


def test_saturated_by_form():
    unit = PositiveForm(numerator_h=(1,), denominator_factors=((1, 1), (2, 1)))
    assert unit.has_unit_factor
    assert saturated_by_form(unit, 0) is True
    assert saturated_by_form(unit, None) is False
    no_unit = PositiveForm(numerator_h=(1,), denominator_factors=((2, 1),))
    assert saturated_by_form(no_unit, 3) is None
    assert saturated_by_form(None, 0) is None


def test_unit_factor_form_with_unsaturated_constituent():
    # the n = 5 mod 6 constituent 2/3 n^2 - 2/3 vanishes at n = 1
    F = RationalFunction.from_factors([1, 0, 1, 2, 4], [(1, 1), (2, 1), (3, 1)])
    series = series_coefficients(F, 36)
    f = fit([(n, series[n]) for n in range(1, 37)], 6, 2)
    assert f.constituents[4].coefficients == (Fraction(-2, 3), 0, Fraction(2, 3))
    assert saturation_index(f, 10) == 1
    form = positive_form_search(F, degree=2, max_a=3)
    assert form.has_unit_factor
    assert saturated_by_form(form, saturation_index(f, 10)) is False


# ---------------------------------------------------------------------------
# Properties over random quasi-polynomials
# ---------------------------------------------------------------------------

def _random_quasi(rng: random.Random) -> QuasiPolynomial:
    period = rng.randint(1, 3)
    degree = rng.randint(0, 2)
    constituents = []
    for _ in range(period):
        if rng.random() < 0.2:
            constituents.append([])
            continue
        coefficients = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(degree)]
        constituents.append(coefficients + [Fraction(rng.randint(1, 3), rng.randint(1, 3))])
    return QuasiPolynomial(period=period, constituents=constituents)


def test_series_of_generating_function_matches_values():
    for seed in range(40):
        f = _random_quasi(random.Random(seed))
        N = 3 * f.period * (max(f.degree, 0) + 1)
        assert series_coefficients(generating_function(f), N) == [f(n) for n in range(N + 1)], f"seed {seed}"


def test_saturation_index_bounded_by_positivity_index():
    for seed in range(40):
        f = _random_quasi(random.Random(seed))
        assert saturation_index(f, 60) <= positivity_index(f, 60), f"seed {seed}"


def test_index_unchanged_by_doubling_the_period():
    for seed in range(40):
        f = _random_quasi(random.Random(seed))
        doubled = QuasiPolynomial(period=2 * f.period, constituents=list(f.constituents) * 2)
        assert index(doubled) == index(f), f"seed {seed}"
        assert all(doubled(n) == f(n) for n in range(1, 13))
