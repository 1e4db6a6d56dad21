import json
import math

import pytest

from soliton2d.cli import run


def run_capture(argv, capsys):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassifyCommand:
    def test_cigar_json(self, capsys):
        code, out, err = run_capture(
            ["classify", "--lambda", "0", "--mu", "-1", "--a0", "1", "--t0", "0",
             "--format", "json"], capsys)
        assert code == 0
        data = json.loads(out)
        assert data["family"] == "G1_CIGAR"
        assert data["gamma"] == "inf"

    def test_g7_with_estimate(self, capsys):
        code, out, _ = run_capture(
            ["classify", "--lambda", "-4", "--mu", "-1", "--a0", "1"], capsys)
        assert code == 0
        data = json.loads(out)
        assert data["family"] == "G7"
        assert data["t0_estimate"] < 0


class TestCatalogCommand:
    def test_g6_entry(self, capsys):
        code, out, _ = run_capture(
            ["catalog", "--family", "g6", "--nu", "3.14159", "--format", "json"], capsys)
        assert code == 0
        data = json.loads(out)
        assert data["family"] == "G6"
        assert data["report"]["outer_end"]["kind"] == "CONE_END"
        assert abs(data["report"]["outer_end"]["angle"] - 3.14159) < 1e-6

    def test_list(self, capsys):
        code, out, _ = run_capture(["catalog", "--list"], capsys)
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 12

    def test_bad_range_exit_one(self, capsys):
        code, _, err = run_capture(["catalog", "--family", "g6", "--nu", "7"], capsys)
        assert code == 1
        assert "RANGE" in err


class TestIntegrateCommand:
    def test_missing_flag_usage(self, capsys):
        code, out, err = run_capture(["integrate", "--lambda", "0", "--mu", "1"], capsys)
        assert code == 1
        assert "--a0" in err
        assert out == ""

    def test_csv_output(self, capsys):
        code, out, _ = run_capture(
            ["integrate", "--lambda", "0", "--mu", "-1", "--a0", "1", "--t0", "0",
             "--window", "0,0.2", "--samples", "9", "--format", "csv"], capsys)
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "t,a,dadt"
        assert len(lines) == 10
        t, a, _ = map(float, lines[-1].split(","))
        assert a == pytest.approx(1.0 / (1.0 - 4.0 * t), rel=1e-10)

    def test_determinism(self, capsys):
        argv = ["integrate", "--lambda", "-2", "--mu", "-1", "--a0", "0.5",
                "--t0", "0", "--window", "0,5", "--samples", "33", "--format", "csv"]
        _, out1, _ = run_capture(argv, capsys)
        _, out2, _ = run_capture(argv, capsys)
        assert out1 == out2


class TestMetricAndReport:
    def test_metric_csv_header(self, capsys):
        code, out, _ = run_capture(
            ["metric", "--lambda", "0", "--mu", "-1", "--a0", "1", "--t0", "0",
             "--b0", "0", "--r-range", "0,3", "--samples", "51", "--format", "csv"],
            capsys)
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "r,b,db_dr,K"
        r, b, _, _ = map(float, lines[25].split(","))
        assert b == pytest.approx(math.tanh(r), abs=1e-7)

    def test_report_json(self, capsys):
        code, out, _ = run_capture(
            ["report", "--lambda", "0", "--mu", "-1", "--a0", "1"], capsys)
        assert code == 0
        data = json.loads(out)
        assert data["complete"] is True
        assert data["outer_end"]["kind"] == "CYLINDER_END"

    def test_verify_json(self, capsys):
        code, out, _ = run_capture(
            ["verify", "--lambda", "0", "--mu", "-1", "--a0", "1", "--b0", "0",
             "--r-range", "0.0,3.0", "--samples", "3001"], capsys)
        assert code == 0
        data = json.loads(out)
        assert data["max_tracefree"] <= 1e-4
        assert data["max_killing"] <= 1e-4

    def test_energy_json(self, capsys):
        code, out, _ = run_capture(
            ["energy", "--lambda", "0", "--mu", "-1", "--a0", "1", "--b0", "0",
             "--r-range", "0,3", "--samples", "6001", "--window", "0.2,2.8"], capsys)
        assert code == 0
        data = json.loads(out)
        assert set(data) >= {"analytic", "finite_difference", "eps",
                             "slope_estimate", "noether_defect", "energy"}


class TestConfigFile:
    def test_flags_override_config(self, tmp_path, capsys):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("lambda = 0\nmu = -1\na0 = 2  # overridden below\nt0 = 0\n")
        code, out, _ = run_capture(
            ["classify", "--config", str(cfg), "--a0", "1"], capsys)
        assert code == 0
        assert json.loads(out)["family"] == "G1_CIGAR"

    def test_config_only(self, tmp_path, capsys):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("lambda = -1\nmu = -1\na0 = 1\nt0 = 0\n")
        code, out, _ = run_capture(["classify", "--config", str(cfg)], capsys)
        assert code == 0
        assert json.loads(out)["family"] == "G6"

    def test_malformed_config(self, tmp_path, capsys):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("lambda 0\n")
        code, _, err = run_capture(["classify", "--config", str(cfg)], capsys)
        assert code == 1
        assert "key = value" in err


class TestExitCodes:
    def test_unknown_flag(self, capsys):
        code, _, err = run_capture(["classify", "--nope", "1"], capsys)
        assert code == 1

    def test_mu_zero_usage_error(self, capsys):
        code, _, err = run_capture(
            ["classify", "--lambda", "1", "--mu", "0", "--a0", "1"], capsys)
        assert code == 1
        assert "MU_ZERO" in err

    def test_no_subcommand(self, capsys):
        code, _, err = run_capture([], capsys)
        assert code == 1

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "prof.csv"
        code, out, _ = run_capture(
            ["integrate", "--lambda", "0", "--mu", "1", "--a0", "1", "--t0", "0",
             "--window", "0,1", "--samples", "5", "--format", "csv",
             "--out", str(target)], capsys)
        assert code == 0
        assert out == ""
        assert target.read_text().startswith("t,a,dadt")
