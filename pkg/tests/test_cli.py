"""Config parsing, subcommand runs, CSV contract and determinism."""

import re

import numpy as np
import pytest

import jcbath.cli as cli
from jcbath.exceptions import ConfigurationError

# Fast settings: short window, coarse oracle bath.
FAST = """
run.t_max = 5
run.t_points = 6
oracle.delta_omega = 0.02
oracle.omega_max = 2.0
"""

NUMBER = re.compile(r"^-?\d\.\d{14}e[+-]\d{2,3}$")


def write_config(tmp_path, text):
    path = tmp_path / "run.conf"
    path.write_text(text)
    return path


def read_csv(path):
    lines = path.read_text().splitlines()
    assert lines[0].startswith("# config: ")
    header = lines[1].split(",")
    rows = [line.split(",") for line in lines[2:]]
    return lines[0], header, rows


class TestConfig:
    def test_defaults(self):
        cfg = cli.ExperimentConfig()
        params = cfg.system()
        assert params.omega_c == params.omega_0 == 1.0
        assert params.coupling == 0.1 and params.n_max == 3
        assert cfg.bath1().alpha == 0.002 and cfg.bath1().omega_cutoff == 5.0
        assert cfg.bath2().alpha == 0.001 and cfg.bath2().omega_cutoff == 8.0
        assert cfg.values["drive.eta"] == 0.005
        assert cfg.engines() == ["common-bath", "traditional",
                                 "no-interference", "exact"]

    def test_load_with_comments_and_overrides(self, tmp_path):
        path = write_config(tmp_path, """
# a comment
system.lambda = 0.2   # inline comment
run.engines = iteration
run.interference = false
""")
        cfg = cli.ExperimentConfig.load(path)
        assert cfg.system().coupling == 0.2
        assert cfg.engines() == ["iteration"]
        assert cfg.values["run.interference"] is False

    def test_unknown_key_rejected(self, tmp_path):
        path = write_config(tmp_path, "system.omega = 1.0\n")
        with pytest.raises(ConfigurationError):
            cli.ExperimentConfig.load(path)

    def test_bad_value_rejected(self, tmp_path):
        path = write_config(tmp_path, "system.omega_c = fast\n")
        with pytest.raises(ConfigurationError):
            cli.ExperimentConfig.load(path)

    def test_bad_engine_rejected(self):
        cfg = cli.ExperimentConfig({"run.engines": "warp"})
        with pytest.raises(ConfigurationError):
            cfg.engines()

    def test_echo_lists_resolved_values(self):
        cfg = cli.ExperimentConfig()
        cfg.resolve_t_max("decay")
        echo = cfg.echo()
        assert "system.lambda=0.1" in echo
        assert "run.t_max=200.0" in echo
        assert "run.interference=true" in echo


class TestDecay:
    def test_all_engines_emit_csv(self, tmp_path):
        cfg = cli.ExperimentConfig.load(write_config(tmp_path, FAST))
        cfg.values["run.out"] = str(tmp_path / "out")
        cfg.values["run.engines"] = \
            "common-bath,traditional,no-interference,exact,iteration"
        files = cli.run_decay(cfg)
        names = sorted(f.name for f in files)
        assert names == ["decay_common_bath.csv", "decay_exact.csv",
                         "decay_iteration.csv", "decay_no_interference.csv",
                         "decay_traditional.csv"]
        for f in files:
            comment, header, rows = read_csv(f)
            assert header[0] == "t"
            assert len(rows) == 6
            for row in rows:
                assert all(NUMBER.match(cell) for cell in row)

    def test_column_sets(self, tmp_path):
        cfg = cli.ExperimentConfig.load(write_config(tmp_path, FAST))
        cfg.values["run.out"] = str(tmp_path / "out")
        cfg.values["run.engines"] = "common-bath,iteration"
        by_name = {f.name: f for f in cli.run_decay(cfg)}
        _, header, _ = read_csv(by_name["decay_common_bath.csv"])
        assert header == ["t", "photon", "excited", "rho_1p1p", "rho_1m1m"]
        _, header, _ = read_csv(by_name["decay_iteration.csv"])
        assert header == ["t", "rho_1p1p", "rho_1m1m"]

    def test_zero_window_single_row(self, tmp_path):
        cfg = cli.ExperimentConfig({"run.t_max": 0.0,
                                    "run.engines": "common-bath",
                                    "run.out": str(tmp_path / "out")})
        files = cli.run_decay(cfg)
        _, _, rows = read_csv(files[0])
        assert len(rows) == 1
        assert float(rows[0][1]) == pytest.approx(1.0)  # initial photon

    def test_deterministic_output(self, tmp_path):
        def run_once():
            cfg = cli.ExperimentConfig.load(write_config(tmp_path, FAST))
            cfg.values["run.out"] = str(tmp_path / "out")
            cfg.values["run.engines"] = "common-bath"
            (path,) = cli.run_decay(cfg)
            return path.read_bytes()

        assert run_once() == run_once()


class TestQuasidark:
    def test_summary_matches_analytic(self, tmp_path, capsys):
        cfg = cli.ExperimentConfig({"run.out": str(tmp_path / "out"),
                                    "run.t_points": 201})
        files = cli.run_quasidark(cfg)
        names = {f.name for f in files}
        assert names == {"quasidark_1g.csv", "quasidark_0e.csv",
                         "quasidark_summary.txt"}
        summary = (tmp_path / "out" / "quasidark_summary.txt").read_text()
        for line in summary.strip().splitlines():
            deviation = float(line.rsplit("deviation=", 1)[1])
            assert deviation < 1e-4
        assert "initial=1g" in capsys.readouterr().out

    def test_single_channel_decays_fully(self, tmp_path):
        cfg = cli.ExperimentConfig({"bath2.alpha": 0.0,
                                    "run.t_max": 800.0,
                                    "run.t_points": 81,
                                    "run.out": str(tmp_path / "out")})
        cli.run_quasidark(cfg)
        _, header, rows = read_csv(tmp_path / "out" / "quasidark_1g.csv")
        photon_final = float(rows[-1][header.index("photon")])
        assert photon_final < 1e-5


class TestSpectrum:
    def test_two_sweeps_and_summary(self, tmp_path, capsys):
        cfg = cli.ExperimentConfig({"drive.points": 41,
                                    "drive.omega_d_min": 0.86,
                                    "drive.omega_d_max": 0.94,
                                    "run.out": str(tmp_path / "out")})
        files = cli.run_spectrum(cfg)
        names = {f.name for f in files}
        assert names == {"spectrum_interference_on.csv",
                         "spectrum_interference_off.csv",
                         "spectrum_summary.txt"}
        _, header, rows = read_csv(tmp_path / "out"
                                   / "spectrum_interference_on.csv")
        assert header == ["omega_d", "photon"]
        assert len(rows) == 41
        assert "asymmetry_ratio" in capsys.readouterr().out

    def test_no_peak_surfaces_warning(self, tmp_path):
        cfg = cli.ExperimentConfig({"drive.points": 3,
                                    "drive.omega_d_min": 1.3,
                                    "drive.omega_d_max": 1.4,
                                    "run.out": str(tmp_path / "out")})
        with pytest.warns(UserWarning, match="no spectral peaks"):
            cli.run_spectrum(cfg)
        summary = (tmp_path / "out" / "spectrum_summary.txt").read_text()
        assert "peaks=none" in summary

    def test_requires_positive_drive(self, tmp_path):
        cfg = cli.ExperimentConfig({"drive.eta": 0.0,
                                    "run.out": str(tmp_path / "out")})
        with pytest.raises(ConfigurationError):
            cli.run_spectrum(cfg)


class TestOracleCompare:
    def test_emits_both_curves_and_deviation(self, tmp_path, capsys):
        cfg = cli.ExperimentConfig({"run.t_max": 5.0, "run.t_points": 6,
                                    "oracle.delta_omega": 0.02,
                                    "oracle.omega_max": 2.0,
                                    "run.out": str(tmp_path / "out")})
        files = cli.run_oracle_compare(cfg)
        names = {f.name for f in files}
        assert names == {"oracle_master.csv", "oracle_exact.csv",
                         "oracle_summary.txt"}
        out = capsys.readouterr().out
        assert "max_photon_deviation=" in out


class TestMain:
    def test_decay_exit_zero(self, tmp_path, capsys):
        conf = write_config(tmp_path, FAST)
        code = cli.main(["decay", "--config", str(conf),
                         "--out", str(tmp_path / "out"),
                         "--engine", "common-bath"])
        assert code == 0
        out = capsys.readouterr().out
        assert "decay_common_bath.csv" in out

    def test_no_interference_flag(self, tmp_path):
        conf = write_config(tmp_path, FAST)
        out_a, out_b = tmp_path / "on", tmp_path / "off"
        cli.main(["decay", "--config", str(conf), "--out", str(out_a),
                  "--engine", "common-bath"])
        cli.main(["decay", "--config", str(conf), "--out", str(out_b),
                  "--engine", "common-bath", "--no-interference"])
        rows_on = read_csv(out_a / "decay_common_bath.csv")[2]
        rows_off = read_csv(out_b / "decay_common_bath.csv")[2]
        assert rows_on != rows_off

    def test_error_is_single_line_nonzero(self, tmp_path, capsys):
        code = cli.main(["decay", "--config", str(tmp_path / "missing.conf")])
        assert code == 1
        err = capsys.readouterr().err.strip().splitlines()
        assert len(err) == 1
        assert err[0].startswith("error: ")

    def test_bad_config_key_reported(self, tmp_path, capsys):
        conf = write_config(tmp_path, "run.turbo = on\n")
        code = cli.main(["decay", "--config", str(conf)])
        assert code == 1
        assert "unknown key" in capsys.readouterr().err
