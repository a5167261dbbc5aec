import json
import math

import jsonschema
import pytest
from click.testing import CliRunner

from asymm_osc.cli import main

try:
    from importlib.resources import files

    SCHEMA = json.loads(
        files("asymm_osc").joinpath("schema/output.schema.json").read_text())
except Exception:  # pragma: no cover
    SCHEMA = None


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, *args, env=None):
    return runner.invoke(main, list(args), env=env, catch_exceptions=False)


def parse_csv(text):
    lines = text.strip().split("\n")
    header = lines[0].split(",")
    meta = dict(line[2:].split("=", 1) for line in lines[1:]
                if line.startswith("# "))
    rows = [line.split(",") for line in lines[1:]
            if not line.startswith("# ")]
    return header, meta, rows


class TestSpectrum:
    def test_symmetric(self, runner):
        res = invoke(runner, "spectrum", "--s", "1", "--count", "3")
        assert res.exit_code == 0
        header, meta, rows = parse_csv(res.output)
        assert header == ["n", "nu_plus", "nu_minus", "energy", "glued"]
        assert [float(r[1]) for r in rows] == pytest.approx([0, 1, 2],
                                                            abs=1e-8)
        assert meta["command"] == "spectrum"

    def test_golden_row(self, runner):
        res = invoke(runner, "spectrum", "--s", "2.2360679775",
                     "--count", "8")
        _, _, rows = parse_csv(res.output)
        got = [float(r[1]) for r in rows]
        want = [-0.183585, 0.423418, 1.04532, 1.66393, 2.2807, 2.89906,
                3.51751, 4.13516]
        assert got == pytest.approx(want, abs=1e-5)

    def test_swap_hint(self, runner):
        res = invoke(runner, "spectrum", "--s", "0.5", "--count", "1")
        assert res.exit_code == 2
        assert "swap" in res.output

    def test_bad_count(self, runner):
        res = invoke(runner, "spectrum", "--s", "2", "--count", "0")
        assert res.exit_code == 2

    def test_deterministic(self, runner):
        a = invoke(runner, "spectrum", "--s", "1.4", "--count", "4").output
        b = invoke(runner, "spectrum", "--s", "1.4", "--count", "4").output
        assert a == b

    def test_json_schema(self, runner):
        res = invoke(runner, "spectrum", "--s", "1.4", "--count", "2",
                     "--format", "json")
        payload = json.loads(res.output)
        jsonschema.validate(payload, SCHEMA)
        assert payload["config"]["s"] == 1.4
        assert payload["config"]["command"] == "spectrum"
        assert len(payload["rows"]) == 2


class TestWavefunction:
    def test_ground_peak(self, runner):
        res = invoke(runner, "wavefunction", "--s", "1", "--n", "0",
                     "--xmin", "-4", "--xmax", "4", "--samples", "81")
        assert res.exit_code == 0
        header, meta, rows = parse_csv(res.output)
        assert header == ["x", "psi", "density"]
        peak = max(float(r[1]) for r in rows)
        assert peak == pytest.approx(0.751126, abs=1e-5)
        assert "norm" in meta and "nu_plus" in meta

    def test_sample_validation(self, runner):
        res = invoke(runner, "wavefunction", "--s", "1", "--n", "0",
                     "--xmin", "-1", "--xmax", "1", "--samples", "0")
        assert res.exit_code == 2

    def test_plot_written(self, runner, tmp_path):
        png = tmp_path / "wf.png"
        res = invoke(runner, "wavefunction", "--s", "1", "--n", "1",
                     "--xmin", "-3", "--xmax", "3", "--samples", "41",
                     "--plot", str(png))
        assert res.exit_code == 0
        assert png.stat().st_size > 0


class TestXMatrix:
    def test_symmetric_ladder(self, runner):
        res = invoke(runner, "xmatrix", "--s", "1", "--size", "2",
                     "--format", "json")
        payload = json.loads(res.output)
        jsonschema.validate(payload, SCHEMA)
        entries = {(int(i), int(j)): v for i, j, v in payload["rows"]}
        assert entries[(0, 1)] == pytest.approx(1 / math.sqrt(2), abs=1e-8)
        assert entries[(0, 0)] == pytest.approx(0.0, abs=1e-8)

    def test_size_zero(self, runner):
        res = invoke(runner, "xmatrix", "--s", "1", "--size", "0")
        assert res.exit_code == 2


class TestBeats:
    def test_header_frequency(self, runner):
        res = invoke(runner, "beats", "--s", "2.2360679775", "--n", "0",
                     "--k", "1", "--t-max", "5", "--steps", "3")
        assert res.exit_code == 0
        _, meta, rows = parse_csv(res.output)
        assert abs(float(meta["frequency"])) == pytest.approx(0.607003,
                                                              abs=1e-5)
        assert len(rows) == 3

    def test_equal_states(self, runner):
        res = invoke(runner, "beats", "--s", "2", "--n", "1", "--k", "1",
                     "--t-max", "5", "--steps", "3")
        assert res.exit_code == 2


class TestCompareDensity:
    def test_grid_and_blank_tail(self, runner):
        res = invoke(runner, "compare-density", "--s", "1", "--n", "0",
                     "--samples", "11")
        assert res.exit_code == 0
        header, meta, rows = parse_csv(res.output)
        assert header == ["x", "quantum_density", "classical_density"]
        amp = float(meta["amplitude_right"])
        # the grid spans 1.15x the turning points
        assert float(rows[0][0]) == pytest.approx(-1.15 * amp, rel=1e-9)
        assert float(rows[-1][0]) == pytest.approx(1.15 * amp, rel=1e-9)
        assert rows[0][2] == "" and rows[-1][2] == ""
        inside = [r for r in rows
                  if abs(float(r[0])) < 0.99 * amp]
        assert all(r[2] != "" for r in inside)

    def test_json_nulls(self, runner):
        res = invoke(runner, "compare-density", "--s", "1", "--n", "0",
                     "--samples", "7", "--format", "json")
        payload = json.loads(res.output)
        jsonschema.validate(payload, SCHEMA)
        assert payload["rows"][0][2] is None

    def test_single_sample(self, runner):
        res = invoke(runner, "compare-density", "--s", "1", "--n", "0",
                     "--samples", "1")
        assert res.exit_code == 2


class TestConfigFile:
    def test_file_and_flag_override(self, runner, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("s=1.4\nformat=json\n")
        res = invoke(runner, "spectrum", "--count", "2",
                     "--config", str(cfg))
        payload = json.loads(res.output)
        assert payload["config"]["s"] == 1.4
        # explicit flag wins over the file
        res = invoke(runner, "spectrum", "--count", "2", "--s", "2.0",
                     "--config", str(cfg))
        payload = json.loads(res.output)
        assert payload["config"]["s"] == 2.0

    def test_env_fallback(self, runner, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("s=1.4\n")
        res = invoke(runner, "spectrum", "--count", "1",
                     env={"ASYMM_OSC_CONFIG": str(cfg)})
        assert res.exit_code == 0

    def test_unknown_key(self, runner, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("wibble=3\n")
        res = invoke(runner, "spectrum", "--s", "2", "--count", "1",
                     "--config", str(cfg))
        assert res.exit_code == 2
        assert "unknown key" in res.output

    def test_missing_s(self, runner):
        res = invoke(runner, "spectrum", "--count", "1")
        assert res.exit_code == 2
        assert "--s" in res.output
