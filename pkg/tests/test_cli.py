import csv
import json
import math

import pytest

from abgrowth.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def write_suite(path, scenarios):
    path.write_text(json.dumps({"schema": "abgrowth-suite/1", "seed": 1, "scenarios": scenarios}))
    return str(path)


def test_indicators_prints_estimates(capsys):
    assert main(["indicators", "exp(z)"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "T_based" in out and "M_based" in out and "slope 1" in out


def test_indicators_writes_csv(tmp_path):
    assert main(["indicators", "exp(z^2)", "--mode", "M_based", "--out", str(tmp_path)]) == EXIT_OK
    with open(tmp_path / "order_M_based.csv") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["r", "log_M", "T", "numerator", "denominator", "ratio"]
    assert float(rows[-1][5]) == pytest.approx(2.0, abs=1e-9)
    assert (tmp_path / "type_M_M_based.csv").exists()


def test_malformed_expression_is_usage_error(capsys):
    assert main(["indicators", "exp("]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "^" in err


@pytest.mark.parametrize("argv", [
    ["indicators", "exp(z)", "--grid", "1,1.1"],
    ["indicators", "exp(z)", "--grid", "0.5,1.1,40"],
    ["indicators", "exp(z)", "--triple", "id,id"],
    ["no-such-command"],
])
def test_bad_arguments_are_usage_errors(argv):
    assert main(argv) == EXIT_USAGE


def test_estimation_failure_exits_one():
    # shifted logs of a polynomial are undefined across the tail
    assert main(["indicators", "z + 1", "--mode", "M_based", "--shifted",
                 "--grid", "1.1,1.01,20"]) == EXIT_FAIL


def test_verify_passing_suite(tmp_path, capsys):
    path = write_suite(tmp_path / "s.json", [
        {"id": "order", "kind": "function_indicator", "f": "exp(z)",
         "estimates": [{"quantity": "order", "mode": "T_based", "value": 1.0}]},
        {"id": "iv", "kind": "lemma_interval_measure", "j3": 2, "N": [10]},
    ])
    out_dir = tmp_path / "out"
    assert main(["verify", path, "--out", str(out_dir)]) == EXIT_OK
    assert (out_dir / "order.json").exists() and (out_dir / "summary.txt").exists()
    assert "2 scenarios: 2 pass" in capsys.readouterr().out


def test_verify_wrong_expectation_fails(tmp_path, capsys):
    path = write_suite(tmp_path / "s.json", [
        {"id": "wrong", "kind": "function_indicator", "f": "exp(z)",
         "estimates": [{"quantity": "order", "mode": "T_based", "value": 3.0}]},
    ])
    assert main(["verify", path]) == EXIT_FAIL
    assert "FAIL" in capsys.readouterr().out


def test_verify_empty_suite_warns(tmp_path, capsys):
    path = write_suite(tmp_path / "s.json", [])
    assert main(["verify", path]) == EXIT_OK
    assert "warning" in capsys.readouterr().err


def test_verify_config_errors(tmp_path):
    path = write_suite(tmp_path / "s.json", [{"id": "x", "kind": "function_indicator",
                                              "f": "exp(z)", "unknown_key": 1}])
    assert main(["verify", path]) == EXIT_USAGE
    assert main(["verify", str(tmp_path / "missing.json")]) == EXIT_USAGE
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2")
    assert main(["verify", str(bad)]) == EXIT_USAGE


def test_verify_seed_override(tmp_path):
    path = write_suite(tmp_path / "s.json", [{"id": "zb", "kind": "zero_bound_property",
                                              "count": 10}])
    out_dir = tmp_path / "out"
    assert main(["verify", path, "--seed", "99", "--out", str(out_dir)]) == EXIT_OK
    doc = json.loads((out_dir / "zb.json").read_text())
    assert doc["environment"]["seed"] == 99


def test_reduce(capsys, tmp_path):
    out = tmp_path / "red.csv"
    assert main(["reduce", "2; -3", "exp(z)", "--out", str(out)]) == EXIT_OK
    with open(out) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["z_re", "z_im", "A1_0_re", "A1_0_im"]
    assert all(float(r[2]) == pytest.approx(-1.0, abs=1e-12) for r in rows[1:])


def test_reduce_rejects_non_solution(capsys):
    assert main(["reduce", "2; -3", "exp(3*z)"]) == EXIT_FAIL
    assert "residual" in capsys.readouterr().err


def test_scales_check(capsys):
    assert main(["scales-check", "log,id,id"]) == EXIT_OK
    assert "pass" in capsys.readouterr().out
    assert main(["scales-check", "cosh,id,id"]) == EXIT_USAGE


def test_trace_csv(tmp_path):
    out = tmp_path / "t.csv"
    assert main(["trace", "1; 0", "--ics", "0,1", "--r-max", "3", "--samples", "30",
                 "--out", str(out)]) == EXIT_OK
    with open(out) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["theta", "r", "log_abs_d0", "log_abs_d1", "phase_d0", "phase_d1",
                       "renorm_count"]
    r, la = float(rows[-1][1]), float(rows[-1][2])
    assert r == pytest.approx(3.0) and la == pytest.approx(math.log(math.sin(3.0)), abs=1e-8)


def test_trace_wrong_ics_count():
    assert main(["trace", "1; 0", "--ics", "1"]) == EXIT_USAGE
