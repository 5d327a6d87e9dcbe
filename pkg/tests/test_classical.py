"""
Tests del Sagnac clásico: γ, tiempo propio, tiempos de ida y vuelta, caminos y fases.
"""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from rotorqm.core import CONSTANTS, ELECTRON, NEUTRON, ErrorCode, Particle, RotatingFrame, RotorQMError
from rotorqm.physics.classical import (
	ClassicalSignal,
	ClosedPath,
	canonical_momentum,
	circulation_phase,
	classical_sagnac_phase,
	de_broglie_sagnac_phase,
	de_broglie_wavelength,
	gamma_factor,
	leading_order_delta_t,
	path_delta_t,
	path_trace,
	proper_time,
	proper_time_reflection_asymmetry,
	reflect_path,
	roundtrip_delta_t,
)
from rotorqm.physics.shell import rotation_coefficient


C = CONSTANTS.c


def closed_form(omega: float, r: float) -> float:
	gamma2 = 1.0 - (omega * r / C) ** 2
	return 4.0 * math.pi * omega * r * r / (C * C * gamma2)


class TestGammaAndProperTime:
	def test_gamma(self):
		frame = RotatingFrame(omega=0.6 * C, radius=2.0)
		assert gamma_factor(frame, 1.0) == pytest.approx(0.8, rel=1e-15)
		assert gamma_factor(frame, 0.0) == 1.0

	def test_gamma_superluminal(self):
		frame = RotatingFrame(omega=1.0, radius=0.5 * C)
		with pytest.raises(RotorQMError) as info:
			gamma_factor(frame, C)
		assert info.value.code == ErrorCode.SUPERLUMINAL_RIM

	def test_proper_time_linear(self):
		frame = RotatingFrame(omega=1e3, radius=10.0)
		t1 = proper_time(frame, 5.0, 1.0, 0.3)
		t2 = proper_time(frame, 5.0, 2.0, 0.6)
		assert t2 == pytest.approx(2.0 * t1, rel=1e-15)

	def test_reflection_asymmetry(self):
		frame = RotatingFrame(omega=1e3, radius=10.0)
		r = 4.0
		gamma = gamma_factor(frame, r)
		expected = 2.0 * frame.omega * r * r * 0.7 / (C * C * gamma)
		assert proper_time_reflection_asymmetry(frame, r, 1.0, 0.7) == pytest.approx(expected, rel=1e-12)


class TestRoundtrip:
	def test_no_rotation(self):
		result = roundtrip_delta_t(RotatingFrame(omega=0.0, radius=1.0))
		assert result.delta_t == 0.0
		assert result.t_cw == result.t_ccw

	def test_known_value(self):
		result = roundtrip_delta_t(RotatingFrame(omega=100.0, radius=0.1))
		assert result.delta_t == pytest.approx(1.3981972e-16, rel=1e-6)
		assert result.t_ccw - result.t_cw == result.delta_t
		assert result.direct_delta_t == pytest.approx(1.3981972e-16, rel=1e-6)

	@given(
		omega=st.floats(min_value=1e-3, max_value=1e6),
		radius=st.floats(min_value=1e-3, max_value=10.0),
	)
	@settings(max_examples=100, deadline=None)
	def test_antisymmetric_in_omega(self, omega, radius):
		forward = roundtrip_delta_t(RotatingFrame(omega=omega, radius=radius))
		backward = roundtrip_delta_t(RotatingFrame(omega=-omega, radius=radius))
		assert backward.delta_t == -forward.delta_t
		assert backward.direct_delta_t == -forward.direct_delta_t
		assert backward.t_cw == forward.t_ccw

	def test_earth_rate_keeps_stored_difference(self):
		frame = RotatingFrame(omega=7.3e-5, radius=0.1)
		result = roundtrip_delta_t(frame)
		assert result.t_ccw - result.t_cw == result.delta_t
		assert result.delta_t > 0.0
		assert result.direct_delta_t == pytest.approx(closed_form(7.3e-5, 0.1), rel=1e-12)
		assert abs(result.delta_t - result.direct_delta_t) <= 4.0 * math.ulp(result.t_ccw)

	def test_leading_order(self):
		frame = RotatingFrame(omega=1e7, radius=2.0)
		result = roundtrip_delta_t(frame)
		assert result.leading_order == leading_order_delta_t(frame, math.pi * 4.0)
		beta2 = (frame.omega * 2.0 / C) ** 2
		assert result.higher_order_residual == pytest.approx(result.leading_order * beta2 / (1.0 - beta2), rel=1e-9)

	def test_leading_order_bad_area(self):
		with pytest.raises(RotorQMError) as info:
			leading_order_delta_t(RotatingFrame(1.0, 1.0), 0.0)
		assert info.value.code == ErrorCode.INVALID_ARGUMENT

	def test_slow_signal(self):
		frame = RotatingFrame(omega=10.0, radius=1.0)
		slow = roundtrip_delta_t(frame, signal_speed=1e3)
		fast = roundtrip_delta_t(frame)
		# La diferencia no depende de la velocidad propia de la señal
		assert slow.direct_delta_t == pytest.approx(fast.direct_delta_t, rel=1e-15)
		assert slow.t_cw > fast.t_cw

	def test_phase(self):
		signal = ClassicalSignal(frequency=5e14)
		assert classical_sagnac_phase(signal, 1e-16) == pytest.approx(2.0 * math.pi * 5e-2, rel=1e-15)
		with pytest.raises(RotorQMError):
			ClassicalSignal(frequency=0.0)


class TestClosedPaths:
	def test_circles_match_closed_form(self, rng):
		for _ in range(100):
			r = float(rng.uniform(1e-3, 10.0))
			beta = float(rng.uniform(-1e-3, 1e-3))
			omega = beta * C / r
			frame = RotatingFrame(omega=omega, radius=r)
			result = path_delta_t(frame, ClosedPath.circle(r))
			assert result.direct_delta_t == pytest.approx(closed_form(omega, r), rel=1e-10)

	def test_star_paths_match_area_law(self, rng):
		for _ in range(100):
			radius = float(rng.uniform(1e-2, 5.0))
			amplitude = float(rng.uniform(-0.6, 0.6))
			lobes = int(rng.integers(1, 8))
			path = ClosedPath.flower(radius, amplitude, lobes)
			omega = float(rng.uniform(-1e-6, 1e-6)) * C / path.r_max
			result = path_delta_t(RotatingFrame(omega=omega, radius=radius), path)
			area = math.pi * radius ** 2 * (1.0 + 0.5 * amplitude ** 2)
			assert result.enclosed_area == pytest.approx(area, rel=1e-12)
			assert result.direct_delta_t == pytest.approx(4.0 * omega * area / C ** 2, rel=1e-8)

	def test_sampled_path(self):
		phi = np.linspace(0.0, 2.0 * math.pi, 401)
		r = 1.0 + 0.2 * np.cos(2.0 * phi)
		path = ClosedPath.from_samples(phi, r)
		frame = RotatingFrame(omega=1e3, radius=1.0)
		result = path_delta_t(frame, path)
		area = math.pi * (1.0 + 0.5 * 0.2 ** 2)
		assert result.enclosed_area == pytest.approx(area, rel=1e-6)
		assert result.direct_delta_t == pytest.approx(4.0 * frame.omega * area / C ** 2, rel=1e-6)

	def test_samples_are_copied(self):
		phi = np.linspace(0.0, 2.0 * math.pi, 9)
		r = np.ones(9)
		ClosedPath.from_samples(phi, r)
		assert np.all(r == 1.0)

	def test_open_paths(self):
		phi = np.linspace(0.0, math.pi, 9)
		with pytest.raises(RotorQMError) as info:
			ClosedPath.from_samples(phi, np.ones(9))
		assert info.value.code == ErrorCode.OPEN_PATH

		phi = np.linspace(0.0, 2.0 * math.pi, 9)
		r = np.linspace(1.0, 2.0, 9)
		with pytest.raises(RotorQMError) as info:
			ClosedPath.from_samples(phi, r)
		assert info.value.code == ErrorCode.OPEN_PATH

	def test_path_through_axis(self):
		phi = np.linspace(0.0, 2.0 * math.pi, 9)
		r = np.ones(9)
		r[3] = 0.0
		with pytest.raises(RotorQMError) as info:
			ClosedPath.from_samples(phi, r)
		assert info.value.code == ErrorCode.NONPOSITIVE_RADIUS

	def test_reflection_reverses_delta_t(self):
		path = ClosedPath.flower(1.0, 0.3, 3)
		frame = RotatingFrame(omega=1e4, radius=1.0)
		forward = path_delta_t(frame, path)
		reflected = path_delta_t(frame.reflected(), reflect_path(path))
		assert reflected.direct_delta_t == pytest.approx(-forward.direct_delta_t, rel=1e-10)
		assert reflected.enclosed_area == pytest.approx(forward.enclosed_area, rel=1e-12)

	def test_superluminal_path(self):
		path = ClosedPath.circle(2.0)
		with pytest.raises(RotorQMError) as info:
			path_delta_t(RotatingFrame(omega=0.6 * C, radius=1.0), path)
		assert info.value.code == ErrorCode.SUPERLUMINAL_RIM

	def test_r_max_between_analytic_samples(self):
		path = ClosedPath.analytic(lambda p: 1.0 + 0.5 * np.sin(2.0 * p), lambda p: np.cos(2.0 * p), samples=5)
		assert max(path.r) == pytest.approx(1.0, abs=1e-12)
		assert path.r_max == pytest.approx(1.5, rel=1e-5)
		with pytest.raises(RotorQMError) as info:
			path_delta_t(RotatingFrame(omega=C / 1.2, radius=1.0), path)
		assert info.value.code == ErrorCode.SUPERLUMINAL_RIM

	def test_r_max_includes_spline_overshoot(self):
		phi = np.linspace(0.0, 2.0 * math.pi, 9)
		path = ClosedPath.from_samples(phi, [1.0, 1.0, 2.0, 2.0, 1.0, 1.0, 1.0, 1.0, 1.0])
		assert path.r_max > 2.0
		fine = np.linspace(0.0, 2.0 * math.pi, 20001)
		assert path.r_max >= float(np.max(path.radius_at(fine))) - 1e-12

	def test_trace_sums_to_delta_t(self):
		path = ClosedPath.flower(1.0, 0.25, 4)
		frame = RotatingFrame(omega=1e3, radius=1.0)
		rows = path_trace(frame, path, points=256)
		assert len(rows) == 256
		total = math.fsum(row["dT_contribution"] for row in rows)
		assert total == pytest.approx(path_delta_t(frame, path).direct_delta_t, rel=1e-10)


class TestQuantumPhases:
	def test_consistency_with_shell(self, rng):
		masses = 10.0 ** rng.uniform(-31, -25, 1000)
		radii = 10.0 ** rng.uniform(-7, -2, 1000)
		omegas = rng.uniform(-1e6, 1e6, 1000)
		for mass, radius, omega in zip(masses, radii, omegas):
			particle = Particle(mass=float(mass))
			frame = RotatingFrame(omega=float(omega), radius=float(radius))
			shell_phase = 2.0 * math.pi * abs(rotation_coefficient(frame, particle))
			assert abs(circulation_phase(frame, particle)) == pytest.approx(shell_phase, rel=1e-12)

	def test_fig_circulation_phase(self, fig_frame):
		assert abs(circulation_phase(fig_frame, ELECTRON)) == pytest.approx(108.548, abs=1e-3)

	def test_de_broglie_equivalence(self):
		frame = RotatingFrame(omega=7.3e-5, radius=0.1)
		speed = 300.0
		wavelength = de_broglie_wavelength(NEUTRON, speed)
		area = math.pi * 0.1 ** 2
		phase = de_broglie_sagnac_phase(frame, wavelength, speed, area)
		assert phase == pytest.approx(circulation_phase(frame, NEUTRON), rel=1e-12)
		assert de_broglie_sagnac_phase(frame, wavelength, speed, area, half_circuit=True) == pytest.approx(0.5 * phase)

	def test_canonical_momentum(self):
		frame = RotatingFrame(omega=2.0, radius=3.0)
		momentum = canonical_momentum(frame, ELECTRON, velocity=(1.0, 0.5, -1.0))
		mass = ELECTRON.mass
		assert momentum.as_tuple() == pytest.approx((mass, mass * 3.0 * 2.5, -mass))

	@pytest.mark.parametrize("radius", [-1.0, float("nan"), float("inf")])
	def test_canonical_momentum_bad_radius(self, radius):
		with pytest.raises(RotorQMError) as info:
			canonical_momentum(RotatingFrame(omega=2.0, radius=3.0), ELECTRON, r=radius)
		assert info.value.code == ErrorCode.NONPOSITIVE_RADIUS

	def test_canonical_momentum_superluminal(self):
		with pytest.raises(RotorQMError) as info:
			canonical_momentum(RotatingFrame(omega=1.0, radius=1.0), ELECTRON, r=2.0 * C)
		assert info.value.code == ErrorCode.SUPERLUMINAL_RIM

	def test_canonical_momentum_on_axis(self):
		momentum = canonical_momentum(RotatingFrame(omega=2.0, radius=3.0), ELECTRON, velocity=(0.0, 1.0, 0.0), r=0.0)
		assert momentum.azimuthal == 0.0
