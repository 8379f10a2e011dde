import csv
import json
import math
from pathlib import Path

import pytest

from ampent.cli import main
from ampent.config import ConfigError, parse_config

ROOT = Path(__file__).resolve().parents[1]
CONFIGS = ROOT / "configs"


def write_config(tmp_path, payload):
    path = tmp_path / "config.json"
    path.write_text(json.dumps(payload))
    return str(path)


def read_rows(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


class TestThreshold:
    @pytest.mark.parametrize(
        "argv,expected",
        [
            (["--scenario", "symmetric", "--r", "1", "--eta", "0"], "critical_gain=1.761594 solver=closed_form"),
            (["--scenario", "asymmetric", "--r", "1", "--eta", "0"], "critical_gain=inf solver=bisection"),
            (["--scenario", "asymmetric", "--r", "1", "--eta", "0.5"], "critical_gain=3.000000 solver=bisection"),
            (["--scenario", "phase_sensitive", "--r", "1", "--r-prime", "0.5"], "alpha0=2.070723"),
        ],
    )
    def test_output(self, capsys, argv, expected):
        assert main(["threshold", *argv]) == 0
        assert capsys.readouterr().out.strip() == expected

    @pytest.mark.parametrize(
        "argv",
        [
            ["--scenario", "symmetric", "--r", "-1"],
            ["--scenario", "asymmetric", "--r", "0"],
            ["--scenario", "phase_sensitive", "--r", "1"],
            ["--scenario", "phase_sensitive", "--r", "0", "--r-prime", "1"],
            ["--scenario", "nonsense", "--r", "1"],
        ],
    )
    def test_invalid(self, argv):
        assert main(["threshold", *argv]) == 2


class TestSweep:
    def test_symmetric_fig2(self, tmp_path, capsys):
        out = tmp_path / "sym.csv"
        assert main(["sweep", "--config", str(CONFIGS / "fig2_symmetric.json"), "--output", str(out)]) == 0
        text = out.read_bytes()
        assert text.startswith(b"scenario,r,theta,eta,gain,nu_minus,log_negativity,entangled\n")
        assert b"\r" not in text
        rows = read_rows(out)
        assert len(rows) == 201
        assert float(rows[0]["gain"]) == 1.0
        assert float(rows[0]["nu_minus"]) == pytest.approx(0.067668, abs=1e-6)
        crossing = [
            (float(a["gain"]), float(b["gain"]))
            for a, b in zip(rows, rows[1:])
            if float(a["nu_minus"]) < 0.5 <= float(b["nu_minus"])
        ]
        assert crossing == [(1.76, 1.77)]

    def test_asymmetric_fig2(self, tmp_path):
        out = tmp_path / "asym.csv"
        assert main(["sweep", "--config", str(CONFIGS / "fig2_asymmetric.json"), "--output", str(out)]) == 0
        rows = read_rows(out)
        nus = [float(row["nu_minus"]) for row in rows]
        assert all(row["entangled"] == "true" for row in rows)
        assert all(a < b < 0.5 for a, b in zip(nus, nus[1:]))

    def test_eta_ordering(self, tmp_path):
        out = tmp_path / "fig3.csv"
        argv = ["sweep", "--scenario", "asymmetric", "--r", "1", "--gain-max", "3", "--output", str(out)]
        for eta in ("0", "0.5", "1", "2"):
            argv += ["--eta", eta]
        assert main(argv) == 0
        rows = read_rows(out)
        by_gain = {}
        for row in rows:
            by_gain.setdefault(row["gain"], []).append(float(row["nu_minus"]))
        for gain, nus in by_gain.items():
            if float(gain) > 1.0:
                assert nus == sorted(nus) and len(set(nus)) == 4

    def test_rows_satisfy_report_invariant(self, tmp_path):
        out = tmp_path / "ps.csv"
        assert main(["sweep", "--config", str(CONFIGS / "phase_sensitive.json"), "--output", str(out)]) == 0
        assert out.read_bytes() == (ROOT / "tests" / "golden" / "phase_sensitive.csv").read_bytes()
        for row in read_rows(out):
            nu = float(row["nu_minus"])
            assert float(row["log_negativity"]) == pytest.approx(max(0.0, -math.log(2 * nu)), abs=1e-8)
            assert row["entangled"] == ("true" if nu < 0.5 else "false")

    def test_deterministic(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        config = str(CONFIGS / "fig3_asymmetric.json")
        assert main(["sweep", "--config", config, "--output", str(a)]) == 0
        assert main(["sweep", "--config", config, "--output", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_output_dir_env(self, tmp_path, monkeypatch):
        monkeypatch.setenv("AMPENT_OUTPUT_DIR", str(tmp_path / "out"))
        assert main(["sweep", "--gain-steps", "3", "--output", "x.csv"]) == 0
        assert (tmp_path / "out" / "x.csv").exists()

    def test_flag_overrides_config(self, tmp_path):
        out = tmp_path / "o.csv"
        assert main(["sweep", "--config", str(CONFIGS / "fig2_symmetric.json"), "--gain-steps", "5", "--output", str(out)]) == 0
        assert len(read_rows(out)) == 5

    def test_unknown_key(self, tmp_path):
        config = write_config(tmp_path, {"sweep": {"scenario": "symmetric", "colour": "red"}})
        assert main(["sweep", "--config", config]) == 2

    def test_unknown_section(self, tmp_path):
        config = write_config(tmp_path, {"plot": {}})
        assert main(["sweep", "--config", config]) == 2

    def test_invalid_values(self, tmp_path):
        assert main(["sweep", "--gain-min", "0.5", "--output", str(tmp_path / "x.csv")]) == 2
        assert main(["sweep", "--gain-steps", "1", "--output", str(tmp_path / "x.csv")]) == 2
        config = write_config(tmp_path, {"sweep": {"r": "one"}})
        assert main(["sweep", "--config", config]) == 2

    def test_missing_config(self, tmp_path):
        assert main(["sweep", "--config", str(tmp_path / "absent.json")]) == 2

    def test_io_error(self, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("")
        assert main(["sweep", "--gain-steps", "3", "--output", str(blocker / "x.csv")]) == 3


class TestOracleCheck:
    def small_config(self, tmp_path, **fock):
        return write_config(
            tmp_path,
            {
                "oracle": {
                    "r": 0.3,
                    "gains": [1.0, 1.3],
                    "etas": [0.0],
                    "selections": ["asymmetric"],
                    "fock": {"dim_per_mode": 20, "dt": 0.01, **fock},
                }
            },
        )

    def test_passes(self, tmp_path, capsys):
        assert main(["oracle-check", "--config", self.small_config(tmp_path)]) == 0
        out = capsys.readouterr().out
        assert "max_covariance_discrepancy=" in out
        assert "max_log_negativity_discrepancy=" in out
        assert out.strip().endswith("PASS")

    def test_coarse_dt(self, tmp_path, capsys):
        assert main(["oracle-check", "--config", self.small_config(tmp_path), "--ode-dt", "0.5"]) == 1
        assert "StepTooLarge" in capsys.readouterr().out

    def test_leakage(self, tmp_path):
        assert main(["oracle-check", "--config", self.small_config(tmp_path), "--dim-per-mode", "3"]) == 4

    def test_bad_config(self, tmp_path):
        config = write_config(tmp_path, {"oracle": {"fock": {"dim": 12}}})
        assert main(["oracle-check", "--config", config]) == 2

    def test_bad_method(self, tmp_path):
        assert main(["oracle-check", "--config", self.small_config(tmp_path, method="euler")]) == 2


class TestConfig:
    def test_parse_full(self):
        config = parse_config(json.loads((CONFIGS / "oracle_check.json").read_text()))
        assert config.sweep is None
        assert config.oracle.fock.dim_per_mode == 26

    def test_rejects_non_object(self):
        with pytest.raises(ConfigError):
            parse_config([1, 2])

    def test_usage_error_exit_code(self):
        assert main(["no-such-command"]) == 2
