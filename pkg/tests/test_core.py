"""
Tests del core: constantes, tipos de parámetros, errores y settings.
"""
import json
import math

import pytest
import scipy.constants as sc

from rotorqm.core import (
	CONSTANTS,
	ELECTRON,
	NEUTRON,
	BoundaryCondition,
	ErrorCode,
	FluxSpec,
	ModeSpec,
	Particle,
	RotatingFrame,
	RotorQMError,
	Sector,
	characteristic_energy,
	constants_json,
	get_particle,
	get_settings,
	load_settings,
	reload_settings,
	validate_frame,
)
from rotorqm.core.run_logging import RunLogger
from rotorqm.core.settings import PRECISION_ENV


class TestConstants:
	def test_match_scipy_codata(self):
		assert CONSTANTS.c == sc.c
		assert CONSTANTS.hbar == pytest.approx(sc.hbar, rel=1e-9)
		assert CONSTANTS.e_charge == sc.e
		assert CONSTANTS.m_electron == pytest.approx(sc.m_e, rel=1e-8)
		assert CONSTANTS.m_neutron == pytest.approx(sc.m_n, rel=1e-8)

	def test_table_is_stable_json(self):
		table = json.loads(constants_json())
		assert table["hbar"]["unit"] == "J*s"
		assert table["hbar"]["source"] == "derived from exact h (truncated)"
		assert table["c"]["source"] == "exact (SI 2019)"
		assert CONSTANTS.hbar == pytest.approx(6.62607015e-34 / (2.0 * math.pi), rel=1e-9)
		assert constants_json() == constants_json()


class TestRotatingFrame:
	def test_from_linear_velocity(self):
		frame = RotatingFrame.from_linear_velocity(-100.0, 1e-5)
		assert frame.omega == pytest.approx(-1e7, rel=1e-15)
		assert frame.linear_speed == pytest.approx(-100.0, rel=1e-15)

	def test_validate_returns_same_frame(self):
		frame = RotatingFrame(omega=10.0, radius=2.0)
		assert validate_frame(frame) is frame

	def test_superluminal_rim(self):
		with pytest.raises(RotorQMError) as info:
			validate_frame(RotatingFrame(omega=CONSTANTS.c, radius=1.0))
		assert info.value.code == ErrorCode.SUPERLUMINAL_RIM

	@pytest.mark.parametrize("radius", [0.0, -1.0])
	def test_nonpositive_radius(self, radius):
		with pytest.raises(RotorQMError) as info:
			validate_frame(RotatingFrame(omega=1.0, radius=radius))
		assert info.value.code == ErrorCode.NONPOSITIVE_RADIUS

	def test_nonfinite_omega(self):
		with pytest.raises(RotorQMError) as info:
			RotatingFrame(omega=math.nan, radius=1.0)
		assert info.value.code == ErrorCode.NONFINITE_VALUE

	def test_reflection_flips_omega(self):
		frame = RotatingFrame(omega=3.0, radius=1.0)
		assert frame.reflected() == RotatingFrame(omega=-3.0, radius=1.0)
		assert RotatingFrame.from_dict(frame.to_dict()) == frame


class TestParticleAndModes:
	def test_presets(self):
		assert get_particle("Electron") is ELECTRON
		assert get_particle("neutron") is NEUTRON

	def test_unknown_particle(self):
		with pytest.raises(RotorQMError) as info:
			get_particle("muon")
		assert info.value.code == ErrorCode.INVALID_CONFIG

	def test_nonpositive_mass(self):
		with pytest.raises(RotorQMError) as info:
			Particle(mass=0.0)
		assert info.value.code == ErrorCode.NONPOSITIVE_MASS

	def test_mode_needs_radial_index_with_bc(self):
		with pytest.raises(RotorQMError) as info:
			ModeSpec(sector=Sector.PLUS, angular_qn=1, bc=BoundaryCondition.DIRICHLET)
		assert info.value.code == ErrorCode.INDEX_OUT_OF_RANGE

	def test_mode_dict(self):
		mode = ModeSpec(sector=Sector.MINUS, angular_qn=-2, axial_k=3.0, radial_index=1, bc=BoundaryCondition.NEUMANN)
		assert ModeSpec.from_dict(mode.to_dict()) == mode

	def test_sector_sign(self):
		assert Sector.PLUS.sign == 1
		assert Sector.MINUS.sign == -1
		assert Sector.PLUS.reflected() is Sector.MINUS

	def test_flux_quantum_si(self):
		assert FluxSpec(1.0).flux == pytest.approx(sc.h / sc.e, rel=1e-8)

	def test_characteristic_energy(self, fig_frame):
		expected = sc.hbar ** 2 / (2.0 * sc.m_e * 1e-10)
		assert characteristic_energy(ELECTRON, fig_frame) == pytest.approx(expected, rel=1e-8)


class TestErrors:
	def test_record(self):
		error = RotorQMError(ErrorCode.OPEN_PATH, "camino abierto", span=1.0, frame=RotatingFrame(1.0, 1.0))
		record = error.to_record()
		assert record["error"] == "OPEN_PATH"
		assert record["details"]["span"] == 1.0
		assert isinstance(record["details"]["frame"], str)
		json.dumps(record)

	def test_is_value_error(self):
		assert issubclass(RotorQMError, ValueError)


class TestSettings:
	def test_defaults(self):
		settings = get_settings()
		assert settings.root_xtol == 1e-15
		assert settings.quad_rtol == 1e-12
		assert settings.class2_tolerance == 1e-9
		assert settings.precision_override is None

	def test_precision_override(self, monkeypatch):
		monkeypatch.setenv(PRECISION_ENV, "1e-10")
		settings = reload_settings()
		assert settings.root_xtol == 1e-10
		assert settings.quad_rtol == 1e-10
		assert settings.precision_override == 1e-10

	@pytest.mark.parametrize("raw", ["abc", "-1", "nan"])
	def test_bad_precision(self, monkeypatch, raw):
		monkeypatch.setenv(PRECISION_ENV, raw)
		with pytest.raises(RotorQMError) as info:
			reload_settings()
		assert info.value.code == ErrorCode.INVALID_CONFIG

	def test_file_override(self, tmp_path):
		path = tmp_path / "settings.json"
		path.write_text(json.dumps({"quad_nodes": 16}), encoding="utf-8")
		settings = load_settings(path, env_file=tmp_path / "missing.env")
		assert settings.quad_nodes == 16
		assert settings.root_xtol == 1e-15

	def test_unknown_key(self, tmp_path):
		path = tmp_path / "settings.json"
		path.write_text(json.dumps({"bogus": 1}), encoding="utf-8")
		with pytest.raises(RotorQMError) as info:
			load_settings(path)
		assert info.value.code == ErrorCode.INVALID_CONFIG


class TestRunLogger:
	def test_messages_mirror_to_logging(self, caplog):
		logger = RunLogger(verbose=False, component="test")
		with caplog.at_level("DEBUG", logger="rotorqm.test"):
			logger.info("hola [x]")
		messages = [record.getMessage() for record in caplog.records]
		assert "hola [x]" in messages
