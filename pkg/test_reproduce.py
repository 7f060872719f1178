"""
Tests for the table reproductions and the reading of printed rational functions.
"""
import pytest

from satpos.fixtures import FGMODP, FKRON1, FSYM, acceptance_rows
from satpos.quasipoly import (
    PositiveForm,
    QuasiPolynomial,
    generating_function,
    positive_form_search,
    saturated_by_form,
    saturation_index,
)
from satpos.reproduce import (
    kronecker_row_label,
    match_printed_form,
    printed_readings,
    reproduce_fgmodp,
    reproduce_fkron1,
    reproduce_fsym,
    table_rows,
)


def test_acceptance_rows():
    assert len(acceptance_rows(FKRON1)) == 3
    assert len(acceptance_rows(FGMODP)) == 2
    assert [t.k for t in acceptance_rows(FSYM)] == [2, 3]
    assert table_rows("fsym", everything=False) is None
    assert table_rows("fgmodp", everything=True) == FGMODP


def test_printed_readings():
    readings = dict(printed_readings(FKRON1[14]))
    assert readings["literal"] == ((1, 3),)
    assert readings["t^2 reading"] == ((1, 2), (2, 1))
    assert dict(printed_readings(FKRON1[8]))["t^2 reading"] == ((2, 1),)
    assert list(dict(printed_readings(FKRON1[0]))) == ["literal"]


def test_match_printed_form():
    two_row = PositiveForm(numerator_h=(1, 8, 11, 2), denominator_factors=((1, 2), (2, 1)))
    assert match_printed_form(FKRON1[0], two_row) == "literal"
    cubic = PositiveForm(numerator_h=(1, 6, 1), denominator_factors=((1, 3),))
    assert match_printed_form(FKRON1[14], cubic) == "t^2 reading"
    constant = PositiveForm(numerator_h=(1,), denominator_factors=((1, 1),))
    assert match_printed_form(FKRON1[8], constant) == "t^2 reading"
    assert match_printed_form(FKRON1[0], constant) is None
    assert match_printed_form(FKRON1[0], None) is None


def test_reproduce_fgmodp_acceptance():
    report = reproduce_fgmodp()
    assert report.passed
    assert [row.status for row in report.rows] == ["PASS", "PASS"]


def test_reproduce_fgmodp_reliable_rows():
    rows = [row for row in FGMODP if row.k in (3, 4)]
    report = reproduce_fgmodp(rows)
    assert all(row.status == "PASS" for row in report.rows[:5])


def test_reproduce_fgmodp_unreliable_row_does_not_gate():
    report = reproduce_fgmodp([FGMODP[1]])
    assert report.rows[0].status == "FAIL"
    assert not report.rows[0].gating
    assert report.passed


def test_reproduce_fsym_acceptance():
    report = reproduce_fsym()
    assert report.passed
    assert len(report.rows) == 2 + 6


def test_reproduce_fsym_four_variables():
    report = reproduce_fsym([FSYM[2]], horizon=60)
    assert report.passed
    assert len(report.rows) == 12


@pytest.mark.slow
def test_reproduce_fkron1_acceptance():
    report = reproduce_fkron1()
    assert report.passed
    assert all(row.status == "PASS" for row in report.rows)


def test_fkron1_forms_with_unit_factor_are_saturated():
    verdicts = []
    for row in FKRON1:
        f = QuasiPolynomial(period=2, constituents=[row.odd, row.even])
        form = positive_form_search(generating_function(f), f.degree, 2)
        verdict = saturated_by_form(form, saturation_index(f, 20))
        assert verdict is not False, kronecker_row_label(row)
        verdicts.append(verdict)
    assert verdicts[0] is True
