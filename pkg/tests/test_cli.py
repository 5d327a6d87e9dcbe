"""
Tests de la CLI: subcomandos, presets, formatos, replay y códigos de salida.
"""
import csv
import io
import json

import pytest

from rotorqm.app import main
from rotorqm.console.commands import COMMANDS, canonical_name
from rotorqm.console.output import format_value
from rotorqm.console.run_config import RunConfig, load_presets, read_config_from_output, resolve_config
from rotorqm.core import ErrorCode, RotorQMError


def read_csv(path):
	"""Cabecera (#) y filas de un CSV de rotorqm."""
	lines = path.read_text(encoding="utf-8").splitlines()
	header = [line for line in lines if line.startswith("#")]
	body = [line for line in lines if not line.startswith("#")]
	return header, list(csv.DictReader(io.StringIO("\n".join(body))))


def run_csv(tmp_path, *args, name="out.csv"):
	out = tmp_path / name
	assert main([*args, "--out", str(out), "--no-timestamp"]) == 0
	return read_csv(out)


class TestPresets:
	def test_fig1_flux_spectrum(self, tmp_path):
		_, rows = run_csv(tmp_path, "flux-spectrum", "--preset", "fig1")
		assert len(rows) == 41
		assert sum(int(row["negative_flag"]) for row in rows) == 17
		assert [int(row["p_or_m"]) for row in rows] == list(range(-10, 31))
		assert float(rows[12]["energy_J"]) == 0.0

	def test_fig2_cylinder_spectrum(self, tmp_path):
		_, rows = run_csv(tmp_path, "cylinder-spectrum", "--preset", "fig2")
		assert len(rows) == 10
		first = {row["bc"]: float(row["energy_J"]) for row in rows if row["s_paper"] == "0"}
		assert first["dirichlet"] == pytest.approx(-1.583e-28, rel=5e-3)
		assert first["neumann"] == pytest.approx(-8.476e-28, rel=5e-3)
		assert sorted({int(row["s_paper"]) for row in rows}) == [0, 1, 2, 3, 4]
		assert all(int(row["s_lib"]) == int(row["s_paper"]) + 1 for row in rows)

	def test_eq86(self, tmp_path):
		_, rows = run_csv(tmp_path, "cylinder-spectrum", "--preset", "eq86")
		assert [row["bc"] for row in rows] == ["dirichlet", "neumann"]

	def test_explicit_flags_win(self, tmp_path):
		_, rows = run_csv(tmp_path, "flux-spectrum", "--preset", "fig1", "--p-max", "5")
		assert len(rows) == 16

	def test_explicit_rotation_replaces_preset_velocity(self):
		config = resolve_config("flux-spectrum", {"omega": 5.0}, "fig1")
		assert config.omega == 5.0
		assert config.linear_velocity is None
		assert config.build_frame().omega == 5.0

	def test_presets_never_set_physics_flags(self):
		for preset in load_presets().values():
			assert "include_geometric_potential" not in preset["values"]

	def test_unknown_preset(self):
		with pytest.raises(RotorQMError) as info:
			resolve_config("flux-spectrum", {}, "fig9")
		assert info.value.code == ErrorCode.INVALID_CONFIG


class TestSubcommands:
	def test_classical_sagnac_at_rest(self, tmp_path):
		_, rows = run_csv(tmp_path, "classical-sagnac", "--omega", "0", "--radius", "1")
		assert float(rows[0]["delta_t"]) == 0.0

	def test_classical_sagnac_trace(self, tmp_path):
		_, rows = run_csv(
			tmp_path, "classical-sagnac", "--omega", "1e3", "--radius", "1", "--path-amplitude", "0.2", "--trace", "--points", "32"
		)
		assert len(rows) == 32
		assert list(rows[0]) == ["phi", "r", "dT_contribution"]

	def test_classical_sagnac_phase_column(self, tmp_path):
		_, rows = run_csv(tmp_path, "sagnac", "--omega", "100", "--radius", "0.1", "--frequency", "5e14")
		assert abs(float(rows[0]["phase_rad"])) > 0.0
		assert float(rows[0]["direct_delta_t"]) == pytest.approx(1.3981972e-16, rel=1e-6)
		assert float(rows[0]["phase_rad"]) == pytest.approx(2.0 * 3.141592653589793 * 5e14 * 1.3981972e-16, rel=1e-6)

	def test_shell_spectrum(self, tmp_path):
		_, rows = run_csv(tmp_path, "shell-spectrum", "--preset", "fig1", "--p-min", "-2", "--p-max", "2")
		families = [row["family"] for row in rows]
		assert families.count("CLASS_II") == 1
		assert families.count("PERIODIC_PSI_CAP") == 5
		assert families.count("PERIODIC_PSI_LOWER") == 5

	def test_flux_series(self, tmp_path):
		_, rows = run_csv(tmp_path, "flux-spectrum", "--preset", "fig1", "--series", "all")
		assert len(rows) == 3 * 41
		static = [row for row in rows if float(row["omega"]) == 0.0]
		assert len(static) == 41

	def test_interference(self, tmp_path):
		out = tmp_path / "interference.json"
		assert main(["interference", "--preset", "fig1", "--format", "json", "--out", str(out), "--no-timestamp"]) == 0
		document = json.loads(out.read_text(encoding="utf-8"))
		assert document["meta"]["result"]["winding"] == 17
		assert document["meta"]["result"]["flags"] == []
		assert len(document["rows"]) == 64

	def test_interference_same_sector(self, tmp_path):
		out = tmp_path / "same.json"
		assert main(["interference", "--preset", "fig1", "--same-sector", "--format", "json", "--out", str(out)]) == 0
		document = json.loads(out.read_text(encoding="utf-8"))
		assert "NO_SAGNAC" in document["meta"]["result"]["flags"]
		assert "timestamp" in document["meta"]

	def test_beat(self, tmp_path):
		_, rows = run_csv(
			tmp_path, "beat", "--preset", "eq86", "--bc", "dirichlet", "--r-points", "3", "--points", "10", "--normalize-modes"
		)
		assert len(rows) == 30
		assert list(rows[0]) == ["r", "t", "cross_term"]

	def test_beat_needs_single_bc(self, tmp_path, capsys):
		assert main(["beat", "--preset", "fig2"]) == 2
		record = json.loads(capsys.readouterr().out)
		assert record["error"] == ErrorCode.INVALID_CONFIG

	def test_census_shell(self, tmp_path):
		_, rows = run_csv(tmp_path, "census", "--preset", "fig1")
		assert len(rows) == 17

	def test_census_cylinder(self, tmp_path):
		header, rows = run_csv(tmp_path, "census", "--preset", "fig2", "--geometry", "cylinder", "--n-max", "2", "--s-max", "2")
		assert all(float(row["energy_J"]) < 0.0 for row in rows)
		assert any(line.startswith("# meta:") and '"dirichlet"' in line for line in header)

	def test_bessel_table(self, tmp_path):
		_, rows = run_csv(tmp_path, "bessel-table", "--n-max", "1", "--s-max", "3")
		assert len(rows) == 12
		assert float(rows[0]["root"]) == pytest.approx(2.404825558, rel=1e-9)
		_, paper_rows = run_csv(tmp_path, "zeros", "--n-max", "0", "--s-max", "2", "--paper-indexing", name="paper.csv")
		assert [row["s"] for row in paper_rows] == ["0", "1", "0", "1"]


class TestProvenance:
	def test_header_contents(self, tmp_path):
		header, _ = run_csv(tmp_path, "flux-spectrum", "--preset", "fig1", "--with-geometric-potential")
		config_line = next(line for line in header if line.startswith("# config: "))
		config = json.loads(config_line[len("# config: "):])
		assert config["include_geometric_potential"] is True
		assert config["preset"] == "fig1"
		assert any(line.startswith("# constants: ") for line in header)
		assert not any(line.startswith("# timestamp") for line in header)

	def test_ten_significant_digits(self):
		assert format_value(-1.5834e-28) == "-1.583400000e-28"
		assert format_value(3) == "3"
		assert format_value(True) == "1"
		assert format_value(None) == ""

	def test_deterministic(self, tmp_path):
		args = ["cylinder-spectrum", "--preset", "fig2"]
		first = tmp_path / "a.csv"
		second = tmp_path / "b.csv"
		assert main([*args, "--out", str(first), "--no-timestamp"]) == 0
		assert main([*args, "--out", str(second), "--no-timestamp"]) == 0
		assert first.read_bytes() == second.read_bytes()

	@pytest.mark.parametrize("fmt", ["csv", "json"])
	def test_replay_reproduces_bytes(self, tmp_path, fmt):
		original = tmp_path / f"original.{fmt}"
		replayed = tmp_path / f"replayed.{fmt}"
		assert main(["flux-spectrum", "--preset", "fig1", "--format", fmt, "--out", str(original), "--no-timestamp"]) == 0
		assert main(["replay", str(original), "--out", str(replayed)]) == 0
		assert replayed.read_bytes() == original.read_bytes()

	def test_read_config(self, tmp_path):
		out = tmp_path / "run.csv"
		assert main(["census", "--preset", "fig1", "--out", str(out), "--no-timestamp"]) == 0
		config = read_config_from_output(out)
		assert config.subcommand == "census"
		assert RunConfig.from_dict(config.to_dict()) == config

	def test_replay_without_header(self, tmp_path, capsys):
		bogus = tmp_path / "bogus.csv"
		bogus.write_text("a,b\n1,2\n", encoding="utf-8")
		assert main(["replay", str(bogus)]) == 2
		assert json.loads(capsys.readouterr().out)["error"] == ErrorCode.INVALID_CONFIG


class TestExitCodes:
	def test_superluminal_record(self, capsys):
		assert main(["classical-sagnac", "--omega", "1e9", "--radius", "1"]) == 2
		record = json.loads(capsys.readouterr().out)
		assert record["error"] == ErrorCode.SUPERLUMINAL_RIM

	def test_error_record_in_out_file(self, tmp_path):
		out = tmp_path / "error.json"
		assert main(["cylinder-spectrum", "--n", "60", "--out", str(out)]) == 2
		assert json.loads(out.read_text(encoding="utf-8"))["error"] == ErrorCode.ORDER_OUT_OF_RANGE

	def test_mutually_exclusive_rotation(self):
		assert main(["flux-spectrum", "--omega", "1", "--linear-velocity", "1"]) == 2

	def test_unknown_subcommand(self):
		assert main(["plot"]) == 2

	def test_stdout_output(self, capsys):
		assert main(["bessel-table", "--n-max", "0", "--s-max", "1", "--no-timestamp"]) == 0
		text = capsys.readouterr().out
		assert text.startswith("# rotorqm ")
		assert "n,kind,s,root" in text

	def test_aliases(self):
		assert canonical_name("flux") == "flux-spectrum"
		assert COMMANDS["flux"] is COMMANDS["flux-spectrum"]
