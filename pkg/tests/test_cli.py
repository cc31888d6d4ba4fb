import math
import os
import subprocess
import sys

import pytest

from lunepot.cli import main

SRC = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src")


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestEval:
    def test_nested_row(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "--a", "0.2", "--eps", "0.5", "--mode", "exact")
        assert code == 0
        fields = out.strip().split(",")
        assert fields[2] == "Nested"
        assert float(fields[3]) == pytest.approx(-0.14914339756999317, abs=1e-14)

    def test_outside_row(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "--a", "3", "--eps", "0.5")
        assert code == 0
        assert out.strip().split(",")[2:] == ["Outside", "0"]

    def test_stable_tiny_radius(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "--a", "1", "--eps", "1e-10", "--mode", "stable"
        )
        assert code == 0
        fields = out.strip().split(",")
        assert fields[2] == "OverlapAtUnit"
        value = float(fields[3])
        assert math.isfinite(value) and value < 0.0

    def test_oracle_has_error_column(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "--a", "0.95", "--eps", "0.1", "--mode", "oracle", "--tol", "1e-11"
        )
        assert code == 0
        fields = out.strip().split(",")
        assert len(fields) == 5
        assert float(fields[4]) <= 1e-11

    def test_domain_error_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "eval", "--a", "-1", "--eps", "0.5")
        assert code == 2
        assert "error" in err

    def test_usage_error_exit_2(self, capsys):
        code, _, _ = run_cli(capsys, "eval", "--a", "1", "--eps", "0.5", "--mode", "bogus")
        assert code == 2


class TestSweep:
    def test_deterministic_output(self, capsys, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for p in paths:
            code, _, _ = run_cli(
                capsys, "sweep", "--eps", "0.2", "--a-min", "0", "--a-max", "1.3",
                "--n", "40", "--out", str(p),
            )
            assert code == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_header_and_rows(self, capsys):
        code, out, _ = run_cli(
            capsys, "sweep", "--eps", "0.5", "--a-min", "0", "--a-max", "0.4", "--n", "4"
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "a,eps,regime,value"
        assert len(lines) == 5
        # nested regime: the value column is constant
        values = {line.split(",")[3] for line in lines[1:]}
        assert len(values) == 1

    def test_zero_column_outside(self, capsys):
        code, out, _ = run_cli(
            capsys, "sweep", "--eps", "0.5", "--a-min", "1.5", "--a-max", "2.0", "--n", "4"
        )
        assert code == 0
        for line in out.strip().split("\n")[1:]:
            assert line.split(",")[3] == "0"

    def test_scaled_lambda_grid(self, capsys):
        code, out, _ = run_cli(
            capsys, "sweep", "--eps", "1e-4", "--lambda-grid", "--n", "21", "--scaled"
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "a,eps,regime,value,scaled"
        scaled = [float(l.split(",")[4]) for l in lines[1:]]
        assert max(scaled) > 0.015  # profile maxima near the quarter points

    def test_bad_range_exit_2(self, capsys):
        code, _, _ = run_cli(
            capsys, "sweep", "--eps", "0.2", "--a-min", "2", "--a-max", "1", "--n", "4"
        )
        assert code == 2


class TestValidate:
    def test_quick_pass(self, capsys):
        code, out, _ = run_cli(
            capsys, "validate", "--eps", "0.5", "--eps", "0.1", "--grid-n", "40"
        )
        assert code == 0
        assert "oracle-agreement" in out
        assert "FAIL" not in out

    def test_eta_table(self, capsys):
        code, out, _ = run_cli(
            capsys, "validate", "--eps", "0.5", "--grid-n", "10", "--eta"
        )
        assert code == 0
        assert "eps,eta" in out
        assert "asymmetry-index" in out


class TestDiagnostics:
    def test_profile_file(self, capsys, tmp_path):
        out_path = tmp_path / "profile.csv"
        code, out, _ = run_cli(
            capsys, "diagnostics", "--eps", "1e-3", "--n", "11", "--out", str(out_path)
        )
        assert code == 0
        assert out.startswith("eta = ")
        lines = out_path.read_text().strip().split("\n")
        assert lines[0] == "lam,a,scaled"
        assert len(lines) == 12


def test_module_entry_point():
    env = dict(os.environ, PYTHONPATH=SRC)
    proc = subprocess.run(
        [sys.executable, "-m", "lunepot", "eval", "--a", "0.2", "--eps", "0.5"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip().split(",")[2] == "Nested"
