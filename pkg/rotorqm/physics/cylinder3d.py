"""
Cilindro macizo en rotación: modos de Bessel, espectros de Dirichlet y
Neumann, censo de energías negativas y el batido de interferencia anómalo.

Los modos son e^{−iEt/ℏ} e^{inφ} e^{ikz} J_|n|(κr), con κR₀ igual a un cero
de J_n (Dirichlet) o de J_n′ (Neumann), y

    E = ℏ²κ²/2m₀ + ℏ²k²/2m₀ + nℏΩ

autovalor del operador −(ℏ²/2m₀)∇² − iℏΩ∂_φ.

Uso:
    from rotorqm.core import ELECTRON, RotatingFrame
    from rotorqm.physics.cylinder3d import dirichlet_energy

    frame = RotatingFrame(omega=-1e7, radius=1e-5)
    dirichlet_energy(frame, ELECTRON, n=1, s=1).energy   # −1.583e-28 J
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..core.constants import CONSTANTS
from ..core.errors import ErrorCode, ResultFlag, RotorQMError
from ..core.frame import BoundaryCondition, ModeSpec, Particle, RotatingFrame, Sector, validate_frame
from ..core.run_logging import get_logger
from .quadrature import integrate
from .shell import CensusResult, InterferenceTrace, SpectrumFamily, SpectrumPoint
from .specfun import MAX_INDEX, MAX_ORDER, bessel_j, bessel_prime_zero, bessel_zero


logger = get_logger("cylinder3d")

# Coeficientes de diferencias centrales de 6º orden (puntos −3..3)
_FIRST_STENCIL = np.array([-1.0 / 60, 3.0 / 20, -3.0 / 4, 0.0, 3.0 / 4, -3.0 / 20, 1.0 / 60])
_SECOND_STENCIL = np.array([1.0 / 90, -3.0 / 20, 3.0 / 2, -49.0 / 18, 3.0 / 2, -3.0 / 20, 1.0 / 90])
_OFFSETS = np.arange(-3, 4)

# Fórmulas de fase del batido para los metadatos
PRINTED_BEAT_PHASE = "cos(2nℏΩt)"
IMPLEMENTED_BEAT_PHASE = "cos(2nΩt)"


@dataclass(frozen=True)
class CylinderMode:
	"""Modo del cilindro con su energía y número de onda radial κ = root/R₀."""
	n: int
	s: int
	k: float
	bc: BoundaryCondition
	energy: float
	radial_wavenumber: float
	radius: float
	root: float
	sector: Sector = Sector.PLUS

	def to_dict(self) -> Dict[str, Any]:
		return {
			"n": self.n,
			"s": self.s,
			"k": self.k,
			"bc": self.bc.value,
			"energy": self.energy,
			"radial_wavenumber": self.radial_wavenumber,
			"radius": self.radius,
			"root": self.root,
			"sector": self.sector.value,
		}


def _check_quantum_numbers(n: int, s: int) -> None:
	if abs(n) > MAX_ORDER:
		raise RotorQMError(ErrorCode.ORDER_OUT_OF_RANGE, f"|n| <= {MAX_ORDER}", n=n)
	if not 1 <= s <= MAX_INDEX:
		raise RotorQMError(ErrorCode.INDEX_OUT_OF_RANGE, f"1 <= s <= {MAX_INDEX}", s=s)


def _boundary_root(n: int, s: int, bc: BoundaryCondition) -> float:
	if bc is BoundaryCondition.DIRICHLET:
		return bessel_zero(n, s)
	if bc is BoundaryCondition.NEUMANN:
		return bessel_prime_zero(n, s)
	raise RotorQMError(ErrorCode.INVALID_ARGUMENT, "el cilindro necesita DIRICHLET o NEUMANN", bc=bc.value)


def cylinder_mode(
	frame: RotatingFrame,
	particle: Particle,
	n: int,
	s: int,
	bc: BoundaryCondition,
	k: float = 0.0,
	sector: Sector = Sector.PLUS,
) -> CylinderMode:
	"""
	Modo (n, s) con la condición de contorno dada.

	Args:
		frame: Sistema en rotación
		particle: Partícula
		n: Número cuántico angular, |n| <= 50
		s: Índice del cero (s >= 1; el índice de las figuras es s − 1)
		bc: DIRICHLET o NEUMANN
		k: Número de onda axial (1/m)
		sector: Sector del modo

	Returns:
		CylinderMode: Modo con κR₀ igual al cero correspondiente
	"""
	validate_frame(frame)
	_check_quantum_numbers(n, s)
	root = _boundary_root(n, s, BoundaryCondition(bc))
	kappa = root / frame.radius
	hbar = CONSTANTS.hbar
	kinetic = hbar ** 2 * (kappa ** 2 + k ** 2) / (2.0 * particle.mass)
	return CylinderMode(
		n=int(n),
		s=int(s),
		k=k,
		bc=BoundaryCondition(bc),
		energy=kinetic + n * hbar * frame.omega,
		radial_wavenumber=kappa,
		radius=frame.radius,
		root=root,
		sector=sector,
	)


def _spectrum_point(
	frame: RotatingFrame,
	particle: Particle,
	n: int,
	s: int,
	bc: BoundaryCondition,
	k: float,
	sector: Sector,
) -> SpectrumPoint:
	validate_frame(frame)
	_check_quantum_numbers(n, s)
	root = _boundary_root(n, s, bc)
	hbar = CONSTANTS.hbar
	kappa = root / frame.radius
	family = SpectrumFamily.CYL_DIRICHLET if bc is BoundaryCondition.DIRICHLET else SpectrumFamily.CYL_NEUMANN
	return SpectrumPoint(
		e0=hbar ** 2 * (kappa ** 2 + k ** 2) / (2.0 * particle.mass),
		correction=n * hbar * frame.omega,
		mode=ModeSpec(sector=sector, angular_qn=int(n), axial_k=k, radial_index=int(s), bc=bc),
		family=family,
		omega=frame.omega,
	)


def dirichlet_energy(
	frame: RotatingFrame,
	particle: Particle,
	n: int,
	s: int,
	k: float = 0.0,
	sector: Sector = Sector.PLUS,
) -> SpectrumPoint:
	"""E^D_{n,s} = (ℏ²/2m₀)(j_{n,s}/R₀)² + nℏΩ (+ ℏ²k²/2m₀)."""
	return _spectrum_point(frame, particle, n, s, BoundaryCondition.DIRICHLET, k, sector)


def neumann_energy(
	frame: RotatingFrame,
	particle: Particle,
	n: int,
	s: int,
	k: float = 0.0,
	sector: Sector = Sector.PLUS,
) -> SpectrumPoint:
	"""E^N_{n,s} = (ℏ²/2m₀)(j′_{n,s}/R₀)² + nℏΩ (+ ℏ²k²/2m₀)."""
	return _spectrum_point(frame, particle, n, s, BoundaryCondition.NEUMANN, k, sector)


def cylinder_energy(
	frame: RotatingFrame,
	particle: Particle,
	n: int,
	s: int,
	bc: BoundaryCondition,
	k: float = 0.0,
	sector: Sector = Sector.PLUS,
) -> SpectrumPoint:
	"""dirichlet_energy o neumann_energy según `bc`."""
	return _spectrum_point(frame, particle, n, s, BoundaryCondition(bc), k, sector)


# ============================================================
# FUNCIONES DE ONDA
# ============================================================

def normalization_constant(mode: CylinderMode) -> float:
	"""
	N tal que ∫₀^R₀ N² J_|n|(κr)² r dr = 1.

	Dirichlet: R₀²/2 · J_{|n|+1}(j)². Neumann: R₀²/2 · (1 − n²/j′²) J_|n|(j′)².
	"""
	order = abs(mode.n)
	root = mode.root
	if mode.bc is BoundaryCondition.DIRICHLET:
		integral = 0.5 * mode.radius ** 2 * float(bessel_j(order + 1, root)) ** 2
	else:
		integral = 0.5 * mode.radius ** 2 * (1.0 - (order / root) ** 2) * float(bessel_j(order, root)) ** 2
	return 1.0 / math.sqrt(integral)


def mode_wavefunction(
	mode: CylinderMode,
	r: ArrayLike,
	phi: ArrayLike = 0.0,
	z: ArrayLike = 0.0,
	t: ArrayLike = 0.0,
	normalized: bool = False,
) -> Any:
	"""
	ψ = e^{−iEt/ℏ} e^{inφ} e^{ikz} J_|n|(κr), sin normalizar salvo que se pida.

	Los argumentos se combinan con las reglas de broadcasting de numpy.

	Raises:
		RotorQMError: R_OUT_OF_RANGE si r queda fuera de [0, R₀]
	"""
	radii = np.asarray(r, dtype=float)
	if np.any(radii < 0.0) or np.any(radii > mode.radius * (1.0 + 1e-12)):
		raise RotorQMError(ErrorCode.R_OUT_OF_RANGE, "r debe estar en [0, R₀]", radius=mode.radius)
	radii = np.minimum(radii, mode.radius)

	radial = np.asarray(bessel_j(abs(mode.n), mode.radial_wavenumber * radii))
	phase = (
		-mode.energy * np.asarray(t, dtype=float) / CONSTANTS.hbar
		+ mode.n * np.asarray(phi, dtype=float)
		+ mode.k * np.asarray(z, dtype=float)
	)
	value = np.exp(1j * phase) * radial
	if normalized:
		value = value * normalization_constant(mode)
	if np.ndim(value) == 0:
		return complex(value)
	return value


def _stencil(func, center: NDArray[np.float64], step: float, weights: NDArray[np.float64]) -> NDArray[np.complex128]:
	total = np.zeros(center.shape, dtype=complex)
	for offset, weight in zip(_OFFSETS, weights):
		if weight != 0.0:
			total = total + weight * func(center + offset * step)
	return total


def eigen_residual(
	mode: CylinderMode,
	frame: RotatingFrame,
	particle: Particle,
	n_points: int = 200,
) -> float:
	"""
	Residuo relativo de Hψ = Eψ con H = −(ℏ²/2m₀)∇² − iℏΩ∂_φ discretizado.

	Las derivadas son diferencias centrales de 6º orden en r, φ y z; se
	evalúan los puntos interiores de una malla radial de `n_points` puntos.
	El residuo se normaliza con max(|E|, E₀, |nℏΩ|)·max|ψ|.
	"""
	if n_points < 8:
		raise RotorQMError(ErrorCode.INVALID_ARGUMENT, "n_points >= 8", n_points=n_points)
	validate_frame(frame)
	hbar = CONSTANTS.hbar
	radius = mode.radius
	grid = np.linspace(0.0, radius, n_points)
	h_r = grid[1] - grid[0]
	r = grid[3:-3]
	phi0, z0 = 0.3, 0.0
	h_phi = 1e-2
	h_z = h_r if mode.k == 0.0 else min(h_r, 0.05 / abs(mode.k))

	def along_r(values: NDArray[np.float64]) -> NDArray[np.complex128]:
		return mode_wavefunction(mode, values, phi0, z0)

	def along_phi(values: NDArray[np.float64]) -> NDArray[np.complex128]:
		return mode_wavefunction(mode, r, values, z0)

	def along_z(values: NDArray[np.float64]) -> NDArray[np.complex128]:
		return mode_wavefunction(mode, r, phi0, values)

	psi = along_r(r)
	d_r = _stencil(along_r, r, h_r, _FIRST_STENCIL) / h_r
	d2_r = _stencil(along_r, r, h_r, _SECOND_STENCIL) / h_r ** 2
	phi_center = np.full_like(r, phi0)
	z_center = np.full_like(r, z0)
	d_phi = _stencil(along_phi, phi_center, h_phi, _FIRST_STENCIL) / h_phi
	d2_phi = _stencil(along_phi, phi_center, h_phi, _SECOND_STENCIL) / h_phi ** 2
	d2_z = _stencil(along_z, z_center, h_z, _SECOND_STENCIL) / h_z ** 2

	laplacian = d2_r + d_r / r + d2_phi / r ** 2 + d2_z
	applied = -(hbar ** 2 / (2.0 * particle.mass)) * laplacian - 1j * hbar * frame.omega * d_phi
	residual = applied - mode.energy * psi

	e0 = hbar ** 2 * (mode.radial_wavenumber ** 2 + mode.k ** 2) / (2.0 * particle.mass)
	scale = max(abs(mode.energy), e0, abs(mode.n * hbar * frame.omega)) * float(np.max(np.abs(psi)))
	return float(np.max(np.abs(residual)) / scale)


# ============================================================
# CENSO
# ============================================================

def negative_energy_census_3d(
	frame: RotatingFrame,
	particle: Particle,
	bc: BoundaryCondition,
	n_max: int,
	s_max: int,
	k: float = 0.0,
) -> CensusResult:
	"""
	Enumera E_{n,s} para |n| <= n_max y 1 <= s <= s_max y devuelve los negativos.

	Orden de salida: n creciente y luego s.
	"""
	if not 0 <= n_max <= MAX_ORDER:
		raise RotorQMError(ErrorCode.ORDER_OUT_OF_RANGE, f"0 <= n_max <= {MAX_ORDER}", n_max=n_max)
	if not 1 <= s_max <= MAX_INDEX:
		raise RotorQMError(ErrorCode.INDEX_OUT_OF_RANGE, f"1 <= s_max <= {MAX_INDEX}", s_max=s_max)

	bc = BoundaryCondition(bc)
	points = [
		cylinder_energy(frame, particle, n, s, bc, k)
		for n in range(-n_max, n_max + 1)
		for s in range(1, s_max + 1)
	]
	negative = tuple(point for point in points if point.negative)
	logger.debug("censo 3D %s: %d negativos de %d", bc.value, len(negative), len(points))
	return CensusResult(negative=negative, scanned=len(points))


# ============================================================
# BATIDO ANÓMALO
# ============================================================

def beat_period(frame: RotatingFrame, n: int) -> Optional[float]:
	"""π/(|n||Ω|); None si el término cruzado no depende del tiempo."""
	if n == 0 or frame.omega == 0.0:
		return None
	return math.pi / (abs(n) * abs(frame.omega))


def anomalous_interference(
	frame: RotatingFrame,
	particle: Particle,
	n: int,
	s: int,
	bc: BoundaryCondition,
	r_grid: ArrayLike,
	t_grid: ArrayLike,
	bc_minus: Optional[BoundaryCondition] = None,
	k: float = 0.0,
) -> InterferenceTrace:
	"""
	Superposición del modo (+n, sector +) con el (−n, sector −) en φ = 0.

	Término cruzado 2J(κ₊r)J(κ₋r)cos((E₊ − E₋)t/ℏ); con la misma condición
	de contorno vale 2J_n²(κr)cos(2nΩt) y el periodo es π/(n|Ω|).

	Args:
		frame: Sistema en rotación
		particle: Partícula
		n: Número cuántico angular del modo del sector +
		s: Índice del cero (común a ambos modos)
		bc: Condición de contorno del modo +
		r_grid: Radios de muestreo en [0, R₀]
		t_grid: Tiempos de muestreo (s)
		bc_minus: Condición del modo − (por defecto igual a `bc`)
		k: Número de onda axial común

	Returns:
		InterferenceTrace: Matrices (r, t) de densidad y término cruzado
	"""
	bc = BoundaryCondition(bc)
	bc_minus = bc if bc_minus is None else BoundaryCondition(bc_minus)
	plus = cylinder_mode(frame, particle, n, s, bc, k, Sector.PLUS)
	minus = cylinder_mode(frame, particle, -n, s, bc_minus, k, Sector.MINUS)

	radii = np.asarray(r_grid, dtype=float)
	times = np.asarray(t_grid, dtype=float)
	psi_plus = mode_wavefunction(plus, radii[:, None], 0.0, 0.0, times[None, :])
	psi_minus = mode_wavefunction(minus, radii[:, None], 0.0, 0.0, times[None, :])
	psi_plus = np.broadcast_to(psi_plus, (radii.size, times.size))
	psi_minus = np.broadcast_to(psi_minus, (radii.size, times.size))

	cross = 2.0 * np.real(np.conj(psi_plus) * psi_minus)
	density = np.abs(psi_plus + psi_minus) ** 2

	splitting = plus.energy - minus.energy
	angular_frequency = splitting / CONSTANTS.hbar
	period = 2.0 * math.pi / abs(angular_frequency) if angular_frequency != 0.0 else None
	flags = (ResultFlag.TIME_DEPENDENT,) if period is not None else ()

	return InterferenceTrace(
		variable="t",
		grid=times,
		total_density=density,
		cross_term=cross,
		extracted_phase=0.0,
		sectors_used=(Sector.PLUS, Sector.MINUS),
		flags=flags,
		meta={
			"n": n,
			"s": s,
			"bc_plus": bc.value,
			"bc_minus": bc_minus.value,
			"energy_splitting_J": splitting,
			"beat_angular_frequency": angular_frequency,
			"beat_period": period,
			"printed_phase": PRINTED_BEAT_PHASE,
			"implemented_phase": IMPLEMENTED_BEAT_PHASE,
		},
		radial_grid=radii,
	)


def beat_cycle_average(
	frame: RotatingFrame,
	particle: Particle,
	n: int,
	s: int,
	bc: BoundaryCondition,
	r: float,
) -> float:
	"""Media temporal del término cruzado sobre un periodo de batido (cuadratura)."""
	period = beat_period(frame, n)
	if period is None:
		raise RotorQMError(ErrorCode.INVALID_ARGUMENT, "sin batido: n = 0 o Ω = 0", n=n, omega=frame.omega)
	plus = cylinder_mode(frame, particle, n, s, bc)
	amplitude = 2.0 * float(bessel_j(abs(n), plus.radial_wavenumber * r)) ** 2
	omega_beat = 2.0 * n * frame.omega

	result = integrate(lambda t: amplitude * np.cos(omega_beat * t), 0.0, period, atol=1e-15 * period * max(amplitude, 1e-300))
	return result.value / period


__all__ = [
	"CylinderMode",
	"IMPLEMENTED_BEAT_PHASE",
	"PRINTED_BEAT_PHASE",
	"anomalous_interference",
	"beat_cycle_average",
	"beat_period",
	"cylinder_energy",
	"cylinder_mode",
	"dirichlet_energy",
	"eigen_residual",
	"mode_wavefunction",
	"negative_energy_census_3d",
	"neumann_energy",
	"normalization_constant",
]
