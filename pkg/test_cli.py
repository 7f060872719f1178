"""
Tests for the satpos command-line surface: output formats, exit codes and thin adapters.
"""
import json

import pytest

from satpos.cli import build_parser, run
from satpos.combinat import kostka, lr_coefficient
from satpos.fixtures import FKRON1


def _run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.fixture
def half_point(tmp_path):
    path = tmp_path / "half.json"
    path.write_text(json.dumps({"dim": 1, "rows": [{"a": ["2"], "rel": "eq", "b": "1"}]}))
    return str(path)


@pytest.fixture
def unit_interval(tmp_path):
    path = tmp_path / "unit.json"
    path.write_text(json.dumps({"dim": 1, "rows": [{"a": ["1"], "rel": "le", "b": "1"},
                                                    {"a": ["-1"], "rel": "le", "b": "0"}]}))
    return str(path)


def test_parser_lists_every_command():
    help_text = build_parser().format_help()
    for command in ("lr", "kostka", "kron", "plethysm", "char", "kostant", "ehrhart", "satip",
                    "lrtest", "stretch", "posform", "hilbert", "snf", "obstruct", "reproduce"):
        assert command in help_text


def test_lr_rule_and_hive_agree(capsys):
    args = ["--alpha", "2,1", "--beta", "2,1", "--lambda", "3,2,1"]
    code, rule = _run_json(capsys, ["lr"] + args)
    assert code == 0
    assert rule["outputs"]["coefficient"] == lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    code, hive = _run_json(capsys, ["lr"] + args + ["--method", "hive"])
    assert code == 0
    assert hive["outputs"]["coefficient"] == 2
    assert rule["command"] == ["lr"]
    assert rule["wall_time_ms"] >= 0


def test_kostka_matches_library(capsys):
    code, result = _run_json(capsys, ["kostka", "--lambda", "2,2", "--content", "1,1,1,1", "--method", "gt"])
    assert code == 0
    assert result["outputs"]["kostka"] == kostka((2, 2), (1, 1, 1, 1))


def test_kron_tworow_table_row(capsys):
    row = FKRON1[0]
    argv = ["kron", "tworow", "--lambda", ",".join(map(str, row.lam)), "--mu", ",".join(map(str, row.mu)),
            "--pi", ",".join(map(str, row.pi))]
    code, result = _run_json(capsys, argv)
    assert code == 0
    assert result["outputs"]["kronecker"] == 10


def test_kron_klimyk(capsys):
    code, result = _run_json(capsys, ["kron", "klimyk", "--lambda", "2", "--mu", "1,1", "--pi", "1,1"])
    assert code == 0
    assert result["outputs"]["kronecker"] == 1
    assert result["inputs"]["embedding"] == [1, 2]


def test_hilbert_syminv(capsys):
    code, result = _run_json(capsys, ["hilbert", "syminv", "--k", "2", "--n", "12"])
    assert code == 0
    assert result["outputs"]["quasipolynomial"] == {"period": 2, "constituents": [["1/2", "1/2"], ["1", "1/2"]]}


def test_hilbert_gp_with_fit(capsys):
    code, result = _run_json(capsys, ["hilbert", "gp", "--k", "3", "--lambda", "21,19"])
    assert code == 0
    assert result["outputs"]["weyl_dim_poly"] == ["1", "63/2", "517/2", "399"]
    code, result = _run_json(capsys, ["hilbert", "gp", "--k", "3", "--lambda", "2,1", "--n", "5"])
    assert result["outputs"]["agrees"] is True


def test_ehrhart_index_from_file(capsys, half_point):
    code, result = _run_json(capsys, ["ehrhart", "index", "--file", half_point])
    assert code == 0
    assert result["outputs"]["index"] == 2


def test_ehrhart_samples_csv(capsys, unit_interval):
    code = run(["ehrhart", "samples", "--file", unit_interval, "--n", "3", "--csv"])
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["n,count", "1,2", "2,3", "3,4"]


def test_ehrhart_quasipoly_pretty(capsys, half_point):
    code = run(["ehrhart", "quasipoly", "--file", half_point, "--period-bound", "2", "--pretty"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.startswith("ehrhart quasipoly")
    assert "quasipolynomial" in out


def test_satip_decide(capsys, half_point):
    code, result = _run_json(capsys, ["satip", "decide", "--file", half_point, "--c", "4", "--sie", "0"])
    assert code == 0
    assert result["outputs"]["has_integer_point"] is True
    code, result = _run_json(capsys, ["satip", "decide", "--file", half_point, "--c", "0", "--sie", "0"])
    assert code == 1
    assert result["error"] == "RelaxationTooSmall"
    assert result["details"] == {"c": 0, "estimate": 0}


def test_lrtest_rational_weights(capsys):
    code, result = _run_json(capsys, ["lrtest", "nonvanishing", "--alpha", "1,1/2", "--beta", "1,1/2",
                                      "--lambda", "3/2,3/2"])
    assert code == 0
    assert result["outputs"]["nonvanishing"] is True


def test_stretch_lr(capsys):
    code, result = _run_json(capsys, ["stretch", "--kind", "lr", "--label", "1", "--label", "1",
                                      "--label", "2", "--n", "6"])
    assert code == 0
    outputs = result["outputs"]
    assert outputs["quasipolynomial"] == {"period": 1, "constituents": [["1"]]}
    assert outputs["positive_form"] == {"h": [1], "den": [[1, 1]]}
    assert outputs["index"] == 1
    assert outputs["saturation_index"] == 0
    assert outputs["saturated_by_form"] is True


def test_posform_from_coefficients(capsys):
    code, result = _run_json(capsys, ["posform", "--numerator", "1", "--denominator", "1,-1,-1,1",
                                      "--degree", "1", "--period-bound", "2"])
    assert code == 0
    assert result["outputs"]["positive_form"] == {"h": [1], "den": [[1, 1], [2, 1]]}
    assert result["outputs"]["modular_index"] == 2


def test_posform_needs_input(capsys):
    code = run(["posform", "--degree", "1"])
    assert code == 2
    assert json.loads(capsys.readouterr().out)["error"] == "ValueError"


def test_snf(capsys):
    code, result = _run_json(capsys, ["snf", "--matrix", "2,4;6,8"])
    assert code == 0
    assert result["outputs"]["diagonal"] == [2, 4]
    assert result["outputs"]["rank"] == 2


def test_obstruct(capsys, unit_interval, half_point):
    code, result = _run_json(capsys, ["obstruct", "--p", unit_interval, "--q", half_point])
    assert code == 0
    assert result["outputs"]["verdict"] == "MODULAR"


def test_char_methods(capsys):
    code, mn = _run_json(capsys, ["char", "mn", "--lambda", "2,1", "--rho", "3"])
    code, frob = _run_json(capsys, ["char", "frobenius", "--lambda", "2,1", "--rho", "3"])
    assert mn["outputs"]["character"] == frob["outputs"]["character"] == -1


def test_plethysm_rows(capsys):
    code, result = _run_json(capsys, ["plethysm", "pbasis", "--lambda", "2", "--mu", "2"])
    assert code == 0
    assert result["outputs"]["rows"] == [{"partition": "4", "coefficient": 1},
                                         {"partition": "2,2", "coefficient": 1}]


def test_kostant(capsys):
    code, result = _run_json(capsys, ["kostant", "--weight", "1,1"])
    assert result["outputs"]["partition_function"] == 2
    code, result = _run_json(capsys, ["kostant", "--weight", "1,1,0", "--lambda", "2"])
    assert result["outputs"]["multiplicity"] == 1


def test_reproduce_fgmodp(capsys):
    code, result = _run_json(capsys, ["reproduce", "fgmodp"])
    assert code == 0
    assert result["outputs"]["passed"] is True
    assert all(row["status"] == "PASS" for row in result["outputs"]["rows"])


# ---------------------------------------------------------------------------
# Exit codes
# ---------------------------------------------------------------------------

def test_domain_error_exit_code(capsys):
    code, result = _run_json(capsys, ["char", "mn", "--lambda", "2,1", "--rho", "2"])
    assert code == 1
    assert result["error"] == "SizeMismatch"
    assert result["details"] == {"sizes": [3, 2]}


def test_invalid_partition_is_usage_error(capsys):
    assert run(["lr", "--alpha", "1,3", "--beta", "1", "--lambda", "2,1"]) == 2


def test_missing_command_is_usage_error(capsys):
    assert run([]) == 2


def test_missing_file_is_input_error(capsys, tmp_path):
    assert run(["ehrhart", "index", "--file", str(tmp_path / "missing.json")]) == 2
