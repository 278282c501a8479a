"""End-to-end tests of the click command group."""

import math

import pytest
from click.testing import CliRunner

from slep_pulse.__main__ import build_cli


@pytest.fixture
def runner():
    return CliRunner()


def _invoke(runner, config_file, out_dir, *args):
    return runner.invoke(build_cli(), ["--config", str(config_file), "--out", str(out_dir), *args])


def _header(path):
    values = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        if line.startswith("# "):
            key, _, value = line[2:].partition(" = ")
            values[key] = value
    return values


class TestPulseCommand:
    def test_writes_csv_and_manifest(self, runner, reference_config_file, tmp_path):
        out = tmp_path / "out"
        result = _invoke(runner, reference_config_file, out, "pulse")
        assert result.exit_code == 0, result.output
        assert (out / "pulse.csv").is_file()
        assert (out / "pulse.gp").is_file()
        assert (out / "manifest.yml").is_file()
        assert "x_star" in result.output

    def test_deterministic_bytes(self, runner, reference_config_file, tmp_path):
        _invoke(runner, reference_config_file, tmp_path / "a", "pulse")
        _invoke(runner, reference_config_file, tmp_path / "b", "pulse")
        assert (tmp_path / "a" / "pulse.csv").read_bytes() == (tmp_path / "b" / "pulse.csv").read_bytes()

    def test_equal_diffusion_layer(self, runner, tmp_path):
        config = tmp_path / "d1.cfg"
        config.write_text("alpha = 1\nbeta = 2\ngamma = 2\nD = 1\nepsilon = 0.012\n", encoding="utf-8")
        result = _invoke(runner, config, tmp_path / "out", "pulse")
        assert result.exit_code == 0, result.output
        header = _header(tmp_path / "out" / "pulse.csv")
        assert float(header["x_star"]) == pytest.approx(0.5 * math.log(1.5), abs=1e-12)

    def test_missing_parameter(self, runner, tmp_path):
        config = tmp_path / "partial.cfg"
        config.write_text("alpha = 1\nbeta = 2\nD = 2\nepsilon = 0.012\n", encoding="utf-8")
        result = _invoke(runner, config, tmp_path / "out", "pulse")
        assert result.exit_code == 2
        assert "gamma" in result.output

    def test_unknown_key(self, runner, tmp_path):
        config = tmp_path / "typo.cfg"
        config.write_text("regime.tau_bar = 3\n", encoding="utf-8")
        result = _invoke(runner, config, tmp_path / "out", "pulse")
        assert result.exit_code == 2

    def test_existence_violation(self, runner, tmp_path):
        config = tmp_path / "bad.cfg"
        config.write_text("alpha = 1\nbeta = 1\ngamma = 3\nD = 2\nepsilon = 0.012\n", encoding="utf-8")
        result = _invoke(runner, config, tmp_path / "out", "pulse")
        assert result.exit_code == 2


class TestVerify:
    def test_intact_and_tampered(self, runner, reference_config_file, tmp_path):
        out = tmp_path / "out"
        _invoke(runner, reference_config_file, out, "pulse")
        ok = runner.invoke(build_cli(), ["verify", str(out)])
        assert ok.exit_code == 0
        assert "manifest ok" in ok.output

        (out / "pulse.gp").unlink()
        broken = runner.invoke(build_cli(), ["verify", str(out)])
        assert broken.exit_code == 4


class TestOtherCommands:
    def test_diagram_rejects_empty_grid(self, runner, reference_config_file, tmp_path):
        result = _invoke(runner, reference_config_file, tmp_path / "out", "diagram", "--psi-count", "0")
        assert result.exit_code == 2

    def test_spectrum_non_negative_wavenumbers(self, runner, reference_config_file, tmp_path):
        out = tmp_path / "out"
        runner_args = ["--threads", "2", "spectrum"]
        config = tmp_path / "spectrum.cfg"
        config.write_text(
            reference_config_file.read_text(encoding="utf-8") + "spectrum.samples = 20\nspectrum.xi_max = 10\n",
            encoding="utf-8",
        )
        result = _invoke(runner, config, out, *runner_args)
        assert result.exit_code == 0, result.output
        rows = [
            line.split(",")
            for line in (out / "dispersion.csv").read_text(encoding="utf-8").splitlines()
            if line and not line.startswith("#")
        ][1:]
        assert len(rows) == 21
        assert all(float(row[0]) >= 0 for row in rows)
        assert float(_header(out / "dispersion.csv")["essential_bound"]) < 0

    def test_short_simulation(self, runner, reference_config_file, tmp_path):
        out = tmp_path / "out"
        result = _invoke(runner, reference_config_file, out, "simulate", "--t-end", "1.2")
        assert result.exit_code == 0, result.output
        header = _header(out / "trajectory.csv")
        assert header["label"] == "indeterminate"
        assert header["clock"] == "slow"
        assert (out / "contour.gp").is_file()

    def test_sweep_requires_points(self, runner, reference_config_file, tmp_path):
        result = _invoke(runner, reference_config_file, tmp_path / "out", "sweep")
        assert result.exit_code == 2

    def test_sweep_classify(self, runner, reference_config_file, tmp_path):
        config = tmp_path / "sweep.cfg"
        config.write_text(
            reference_config_file.read_text(encoding="utf-8") + "sweep.points = 3,2; 13,0.5\n",
            encoding="utf-8",
        )
        out = tmp_path / "out"
        result = _invoke(runner, config, out, "sweep", "--mode", "classify")
        assert result.exit_code == 0, result.output
        text = (out / "sweep.csv").read_text(encoding="utf-8")
        assert "3,2,stable" in text
        assert "13,0.5,drift" in text
