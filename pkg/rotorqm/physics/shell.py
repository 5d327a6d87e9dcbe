"""
Mecánica cuántica sobre la capa cilíndrica en rotación.

Coeficientes del problema de autovalores (A, B±, D±) y su clasificación,
los espectros de cada forma de imponer la identificación angular, el
acoplamiento con un flujo magnético axial, la interferencia entre sectores
y el censo de estados de energía negativa.

Convención de sectores: en el sector + los modos periódicos son e^{−ipφ}
y en el sector − su imagen especular e^{+ipφ}. Con esa etiqueta las
energías tienen la misma forma en ambos sectores.

Uso:
    from rotorqm.core import ELECTRON, FluxSpec, RotatingFrame
    from rotorqm.physics.shell import flux_spectrum

    frame = RotatingFrame(omega=-1e7, radius=1e-5)
    flux_spectrum(frame, ELECTRON, FluxSpec(2.0), p=3).energy   # −9.9356e-28 J
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..core.constants import CONSTANTS
from ..core.errors import ErrorCode, ResultFlag, RotorQMError
from ..core.frame import (
	FluxSpec,
	ModeSpec,
	NO_FLUX,
	Particle,
	RotatingFrame,
	Sector,
	characteristic_energy,
	radius_energy,
	validate_frame,
)
from ..core.run_logging import get_logger
from ..core.settings import get_settings


logger = get_logger("shell")


class SolutionClass(str, Enum):
	"""Régimen de soluciones según el discriminante D = A² + 4B"""
	I = "I"
	II = "II"
	III = "III"


class SpectrumFamily(str, Enum):
	"""Familias de espectro disponibles"""
	CLASS_II = "CLASS_II"
	PERIODIC_PSI_CAP = "PERIODIC_PSI_CAP"
	PERIODIC_PSI_LOWER = "PERIODIC_PSI_LOWER"
	FLUX = "FLUX"
	CYL_DIRICHLET = "CYL_DIRICHLET"
	CYL_NEUMANN = "CYL_NEUMANN"


# ============================================================
# COEFICIENTES Y CLASIFICACIÓN
# ============================================================

@dataclass(frozen=True)
class ShellCoefficients:
	"""A, B± y D± = A² + 4B± del problema de autovalores en la capa."""
	a_coeff: float
	b_plus: float
	b_minus: float
	d_plus: float
	d_minus: float
	class_plus: SolutionClass
	class_minus: SolutionClass
	tolerance: float

	def b_for(self, sector: Sector) -> float:
		return self.b_plus if sector is Sector.PLUS else self.b_minus

	def d_for(self, sector: Sector) -> float:
		return self.d_plus if sector is Sector.PLUS else self.d_minus

	def class_for(self, sector: Sector) -> SolutionClass:
		return self.class_plus if sector is Sector.PLUS else self.class_minus

	@property
	def flags(self) -> Tuple[str, ...]:
		if SolutionClass.III in (self.class_plus, self.class_minus):
			return (ResultFlag.UNSUPPORTED_FOR_SOLVE,)
		return ()

	@property
	def sagnac_phase(self) -> float:
		"""Desfase cuántico 2π|A| (rad)."""
		return 2.0 * math.pi * abs(self.a_coeff)

	def to_dict(self) -> Dict[str, Any]:
		return {
			"a_coeff": self.a_coeff,
			"b_plus": self.b_plus,
			"b_minus": self.b_minus,
			"d_plus": self.d_plus,
			"d_minus": self.d_minus,
			"class_plus": self.class_plus.value,
			"class_minus": self.class_minus.value,
			"tolerance": self.tolerance,
			"flags": list(self.flags),
		}


def classify_discriminant(d: float, tolerance: Optional[float] = None) -> SolutionClass:
	"""I si D > τ_D, II si |D| <= τ_D, III si D < −τ_D."""
	tau = get_settings().class2_tolerance if tolerance is None else tolerance
	if abs(d) <= tau:
		return SolutionClass.II
	return SolutionClass.I if d > 0.0 else SolutionClass.III


def rotation_coefficient(frame: RotatingFrame, particle: Particle) -> float:
	"""A = −2m₀R₀²Ω/ℏ."""
	return -2.0 * particle.mass * frame.radius ** 2 * frame.omega / CONSTANTS.hbar


def shell_coefficients(
	frame: RotatingFrame,
	particle: Particle,
	k_plus: float = 0.0,
	k_minus: Optional[float] = None,
	e_plus: float = 0.0,
	e_minus: Optional[float] = None,
) -> ShellCoefficients:
	"""
	Coeficientes del problema ψ″ ± iAψ′ + B±ψ = 0 en cada sector.

	Args:
		frame: Sistema en rotación
		particle: Partícula
		k_plus, k_minus: Número de onda axial por sector (k₋ = k₊ por defecto)
		e_plus, e_minus: Energía por sector en J (E₋ = E₊ por defecto)

	Returns:
		ShellCoefficients: A, B±, D± y la clase de cada sector
	"""
	validate_frame(frame)
	k_minus = k_plus if k_minus is None else k_minus
	e_minus = e_plus if e_minus is None else e_minus

	r2 = frame.radius ** 2
	hbar2 = CONSTANTS.hbar ** 2
	a = rotation_coefficient(frame, particle)
	b_plus = -r2 * (k_plus ** 2 - 2.0 * particle.mass * e_plus / hbar2)
	b_minus = -r2 * (k_minus ** 2 - 2.0 * particle.mass * e_minus / hbar2)
	d_plus = a * a + 4.0 * b_plus
	d_minus = a * a + 4.0 * b_minus
	tau = get_settings().class2_tolerance

	return ShellCoefficients(
		a_coeff=a,
		b_plus=b_plus,
		b_minus=b_minus,
		d_plus=d_plus,
		d_minus=d_minus,
		class_plus=classify_discriminant(d_plus, tau),
		class_minus=classify_discriminant(d_minus, tau),
		tolerance=tau,
	)


def classify(coeffs: ShellCoefficients) -> Dict[Sector, SolutionClass]:
	"""Clase de soluciones por sector (la clase III solo se clasifica)."""
	return {
		Sector.PLUS: classify_discriminant(coeffs.d_plus, coeffs.tolerance),
		Sector.MINUS: classify_discriminant(coeffs.d_minus, coeffs.tolerance),
	}


# ============================================================
# PUNTOS DE ESPECTRO
# ============================================================

@dataclass(frozen=True)
class SpectrumPoint:
	"""
	Un autovalor de energía con sus números cuánticos.

	energy = e0 + correction, donde e0 es la energía del sistema sin rotar
	(incluye el potencial geométrico si se pidió) y correction el término
	que depende de Ω. Si e0 domina, correction se guarda como energy − e0
	para que la descomposición guardada sea exacta.
	"""
	e0: float
	correction: float
	mode: ModeSpec
	family: SpectrumFamily
	omega: float
	flux_ratio: float = 0.0
	momentum: Optional[float] = None
	energy: float = field(init=False)

	def __post_init__(self) -> None:
		energy = self.e0 + self.correction
		object.__setattr__(self, "energy", energy)
		if abs(self.e0) >= abs(self.correction):
			# Con |e0| >= |correction| la resta es exacta: energy − e0 == correction
			object.__setattr__(self, "correction", energy - self.e0)

	@property
	def negative(self) -> bool:
		return self.energy < 0.0

	def to_row(self) -> Dict[str, Any]:
		"""Fila CSV (family, sector, p_or_m, k, flux_ratio, omega, energy_J, E0_J, correction_J, negative_flag)."""
		return {
			"family": self.family.value,
			"sector": self.mode.sector.value,
			"p_or_m": self.mode.angular_qn,
			"k": self.mode.axial_k,
			"flux_ratio": self.flux_ratio,
			"omega": self.omega,
			"energy_J": self.energy,
			"E0_J": self.e0,
			"correction_J": self.correction,
			"negative_flag": int(self.negative),
		}


def geometric_potential(particle: Particle, frame_radius: float) -> float:
	"""V_q = −ℏ²/(2m₀R₀²), siempre negativo."""
	return -radius_energy(particle, frame_radius)


def _axial_energy(particle: Particle, k: float) -> float:
	return CONSTANTS.hbar ** 2 * k * k / (2.0 * particle.mass)


def _base_energy(particle: Particle, frame: RotatingFrame, k: float, include_geometric_potential: bool) -> float:
	base = _axial_energy(particle, k)
	if include_geometric_potential:
		base += geometric_potential(particle, frame.radius)
	return base


def _frame_energy(particle: Particle, frame: RotatingFrame) -> float:
	return 0.5 * particle.mass * frame.radius ** 2 * frame.omega ** 2


def class2_energy(
	frame: RotatingFrame,
	particle: Particle,
	k: float = 0.0,
	sector: Sector = Sector.PLUS,
	include_geometric_potential: bool = False,
) -> SpectrumPoint:
	"""
	Energía de las soluciones de clase II (D = 0).

	E = ℏ²k²/2m₀ − ½m₀R₀²Ω², igual en ambos sectores.
	"""
	validate_frame(frame)
	return SpectrumPoint(
		e0=_base_energy(particle, frame, k, include_geometric_potential),
		correction=-_frame_energy(particle, frame),
		mode=ModeSpec(sector=sector, angular_qn=0, axial_k=k),
		family=SpectrumFamily.CLASS_II,
		omega=frame.omega,
	)


def periodic_cap_psi_energy(
	frame: RotatingFrame,
	particle: Particle,
	m: int,
	k: float = 0.0,
	sector: Sector = Sector.PLUS,
	include_geometric_potential: bool = False,
) -> SpectrumPoint:
	"""
	Espectro con la identificación impuesta sobre Ψ± (factor reducido periódico).

	E = ℏ²k²/2m₀ + m²B_R − ½m₀R₀²Ω²; degenerado en ±m.

	Args:
		frame: Sistema en rotación
		particle: Partícula
		m: Número cuántico entero
		k: Número de onda axial (1/m)
		sector: Sector del estado
		include_geometric_potential: Suma V_q a la parte no rotante

	Returns:
		SpectrumPoint: Familia PERIODIC_PSI_CAP
	"""
	b_r = characteristic_energy(particle, frame)
	return SpectrumPoint(
		e0=_base_energy(particle, frame, k, include_geometric_potential) + m * m * b_r,
		correction=-_frame_energy(particle, frame),
		mode=ModeSpec(sector=sector, angular_qn=int(m), axial_k=k),
		family=SpectrumFamily.PERIODIC_PSI_CAP,
		omega=frame.omega,
	)


@dataclass(frozen=True)
class ShellMomentum:
	"""Momento angular Π^φ̂ separado en su término clásico y el cuántico."""
	classical_term: float
	quantum_term: float

	@property
	def total(self) -> float:
		return self.classical_term + self.quantum_term


def periodic_cap_psi_momentum(
	frame: RotatingFrame,
	particle: Particle,
	m: int,
	branch: int = 1,
	sector: Sector = Sector.PLUS,
) -> ShellMomentum:
	"""
	Autovalor de Π^φ̂ para Ψ± periódico: m₀R₀Ω ± ℏm/R₀ (sector +).

	El término m₀R₀Ω no depende de ℏ. En el sector − ambos términos
	cambian de signo.
	"""
	if branch not in (1, -1):
		raise RotorQMError(ErrorCode.INVALID_ARGUMENT, "branch debe ser +1 o −1", branch=branch)
	validate_frame(frame)
	sign = sector.sign
	return ShellMomentum(
		classical_term=sign * particle.mass * frame.radius * frame.omega,
		quantum_term=sign * branch * CONSTANTS.hbar * m / frame.radius,
	)


def omega_quantization(particle: Particle, frame_radius: float, s: int) -> float:
	"""Ω_s = ℏs/(2m₀R₀²) = s·B_R/ℏ (rad/s)."""
	return s * radius_energy(particle, frame_radius) / CONSTANTS.hbar


def periodic_lower_psi_energy(
	frame: RotatingFrame,
	particle: Particle,
	p: int,
	k: float = 0.0,
	sector: Sector = Sector.PLUS,
	include_geometric_potential: bool = False,
) -> SpectrumPoint:
	"""
	Espectro con la identificación impuesta directamente sobre ψ± (C₁± = 0).

	E = ℏ²k²/2m₀ + p²B_R + ℏpΩ. El acoplamiento ℏpΩ rompe la degeneración
	±p. El punto lleva el momento −ℏp/R₀ (con el signo del sector).
	"""
	b_r = characteristic_energy(particle, frame)
	return SpectrumPoint(
		e0=_base_energy(particle, frame, k, include_geometric_potential) + p * p * b_r,
		correction=CONSTANTS.hbar * p * frame.omega,
		mode=ModeSpec(sector=sector, angular_qn=int(p), axial_k=k),
		family=SpectrumFamily.PERIODIC_PSI_LOWER,
		omega=frame.omega,
		momentum=-sector.sign * CONSTANTS.hbar * p / frame.radius,
	)


def flux_spectrum(
	frame: RotatingFrame,
	particle: Particle,
	flux: FluxSpec,
	p: int,
	k: float = 0.0,
	sector: Sector = Sector.PLUS,
	include_geometric_potential: bool = False,
) -> SpectrumPoint:
	"""
	Espectro con flujo magnético axial: E = (p − f)(B_R(p − f) + ℏΩ), f = Φ/Φ_L.

	Con f = 0 se reduce a periodic_lower_psi_energy. Un k distinto de cero
	suma ℏ²k²/2m₀ a la parte no rotante.

	Args:
		frame: Sistema en rotación
		particle: Partícula
		flux: Flujo como cociente Φ/Φ_L
		p: Número cuántico entero
		k: Número de onda axial (0 = estado deslocalizado en z)
		sector: Sector del estado
		include_geometric_potential: Suma V_q a la parte no rotante

	Returns:
		SpectrumPoint: Familia FLUX con e0 = B_R(p−f)² y correction = ℏΩ(p−f)
	"""
	b_r = characteristic_energy(particle, frame)
	shift = p - flux.flux_ratio
	return SpectrumPoint(
		e0=_base_energy(particle, frame, k, include_geometric_potential) + (shift * shift) * b_r,
		correction=CONSTANTS.hbar * shift * frame.omega,
		mode=ModeSpec(sector=sector, angular_qn=int(p), axial_k=k),
		family=SpectrumFamily.FLUX,
		omega=frame.omega,
		flux_ratio=flux.flux_ratio,
		momentum=-sector.sign * CONSTANTS.hbar * p / frame.radius,
	)


def flux_equivalent_omega(flux_ratio: float, p: int, b_r_prime: float) -> float:
	"""
	Ω_p = B′_R(p − f)/ℏ.

	Con B′_R = B_R(R₀) el espectro en p coincide con el de solo flujo en
	una capa de radio R₀/√2.
	"""
	return b_r_prime * (p - flux_ratio) / CONSTANTS.hbar


def equivalent_flux_radius(frame_radius: float) -> float:
	"""Radio R₀/√2 de la capa sin rotación que imita rotación + flujo."""
	return frame_radius / math.sqrt(2.0)


def spectrum_family(
	family: SpectrumFamily,
	frame: RotatingFrame,
	particle: Particle,
	quantum_numbers: Iterable[int],
	k: float = 0.0,
	flux: FluxSpec = NO_FLUX,
	sector: Sector = Sector.PLUS,
	include_geometric_potential: bool = False,
) -> List[SpectrumPoint]:
	"""Evalúa una familia de espectro de la capa sobre varios números cuánticos."""
	if family is SpectrumFamily.CLASS_II:
		return [class2_energy(frame, particle, k, sector, include_geometric_potential)]
	if family is SpectrumFamily.PERIODIC_PSI_CAP:
		return [periodic_cap_psi_energy(frame, particle, m, k, sector, include_geometric_potential) for m in quantum_numbers]
	if family is SpectrumFamily.PERIODIC_PSI_LOWER:
		return [periodic_lower_psi_energy(frame, particle, p, k, sector, include_geometric_potential) for p in quantum_numbers]
	if family is SpectrumFamily.FLUX:
		return [flux_spectrum(frame, particle, flux, p, k, sector, include_geometric_potential) for p in quantum_numbers]
	raise RotorQMError(ErrorCode.INVALID_ARGUMENT, "familia no disponible en la capa", family=family.value)


# ============================================================
# INTERFERENCIA
# ============================================================

@dataclass(frozen=True, eq=False)
class InterferenceTrace:
	"""
	Densidad |ψ|² y término cruzado muestreados sobre φ (o sobre t).

	extracted_phase es 2π|A| módulo 2π; winding cuenta las vueltas
	completas de la fase total.
	"""
	variable: str
	grid: NDArray[np.float64]
	total_density: NDArray[np.float64]
	cross_term: NDArray[np.float64]
	extracted_phase: float
	sectors_used: Tuple[Sector, Sector]
	winding: int = 0
	roundtrip_cross_term: Optional[float] = None
	flags: Tuple[str, ...] = ()
	meta: Dict[str, Any] = field(default_factory=dict)
	radial_grid: Optional[NDArray[np.float64]] = None

	def to_rows(self) -> List[Dict[str, float]]:
		"""Filas para CSV; con malla radial, orden r y luego la variable."""
		if self.radial_grid is not None:
			return [
				{
					"r": float(r),
					self.variable: float(x),
					"density": float(self.total_density[i, j]),
					"cross_term": float(self.cross_term[i, j]),
				}
				for i, r in enumerate(self.radial_grid)
				for j, x in enumerate(self.grid)
			]
		return [
			{self.variable: float(x), "density": float(rho), "cross_term": float(delta)}
			for x, rho, delta in zip(self.grid, self.total_density, self.cross_term)
		]


def sector_interference(
	c_plus: complex,
	c_minus: complex,
	a_coeff: float,
	phi_grid: ArrayLike,
	sectors: Tuple[Sector, Sector] = (Sector.PLUS, Sector.MINUS),
) -> InterferenceTrace:
	"""
	Interferencia de dos estados de clase II con C₁ = 0.

	Con sectores opuestos ψ₊ = e^{−iAφ/2}c₊ y ψ₋ = e^{+iAφ/2}c₋; el término
	cruzado es 2ℜ(c₊*c₋e^{iAφ}) y vale 2ℜ(c₊*c₋e^{i2πA}) tras una vuelta.
	Si ambos estados están en el mismo sector la densidad no depende de A,
	la fase es 0 y la traza lleva NO_SAGNAC y SECTOR_MISMATCH_FLAG.

	Args:
		c_plus: Amplitud del primer estado
		c_minus: Amplitud del segundo estado
		a_coeff: Coeficiente A
		phi_grid: Ángulos de muestreo (rad)
		sectors: Sectores de los dos estados

	Returns:
		InterferenceTrace: Densidad, término cruzado y fase extraída
	"""
	phi = np.asarray(phi_grid, dtype=float)
	c1, c2 = complex(c_plus), complex(c_minus)
	first, second = sectors

	if first is second:
		# Ambos estados comparten la envolvente e^{∓iAφ/2}
		envelope = np.exp(-first.sign * 0.5j * a_coeff * phi)
		psi1, psi2 = c1 * envelope, c2 * envelope
		density = np.abs(psi1 + psi2) ** 2
		cross = 2.0 * np.real(np.conj(psi1) * psi2)
		turn = np.exp(-first.sign * 1j * math.pi * a_coeff)
		return InterferenceTrace(
			variable="phi",
			grid=phi,
			total_density=density,
			cross_term=cross,
			extracted_phase=0.0,
			sectors_used=(first, second),
			roundtrip_cross_term=float(2.0 * np.real(np.conj(c1 * turn) * (c2 * turn))),
			flags=(ResultFlag.SECTOR_MISMATCH_FLAG, ResultFlag.NO_SAGNAC),
		)

	# Orden canónico: amplitud del sector + primero
	if first is Sector.MINUS:
		c1, c2 = c2, c1
	product = c1.conjugate() * c2
	cross = 2.0 * np.real(product * np.exp(1j * a_coeff * phi))
	density = abs(c1) ** 2 + abs(c2) ** 2 + cross
	total_phase = 2.0 * math.pi * abs(a_coeff)

	return InterferenceTrace(
		variable="phi",
		grid=phi,
		total_density=np.maximum(density, 0.0),
		cross_term=cross,
		extracted_phase=math.fmod(total_phase, 2.0 * math.pi),
		sectors_used=(first, second),
		winding=int(total_phase // (2.0 * math.pi)),
		roundtrip_cross_term=2.0 * (product * complex(math.cos(2.0 * math.pi * a_coeff), math.sin(2.0 * math.pi * a_coeff))).real,
		meta={"a_coeff": a_coeff, "total_phase": total_phase},
	)


# ============================================================
# CENSO DE ENERGÍAS NEGATIVAS
# ============================================================

@dataclass(frozen=True)
class CensusResult:
	"""Estados con E < 0 encontrados en un barrido, ordenados por número cuántico."""
	negative: Tuple[SpectrumPoint, ...]
	scanned: int

	@property
	def count(self) -> int:
		return len(self.negative)


def negative_energy_census_shell(
	frame: RotatingFrame,
	particle: Particle,
	flux: FluxSpec,
	p_range: Iterable[int],
	k: float = 0.0,
	include_geometric_potential: bool = False,
) -> CensusResult:
	"""Enumera flux_spectrum sobre p_range y devuelve los estados con E < 0."""
	points = [flux_spectrum(frame, particle, flux, p, k, include_geometric_potential=include_geometric_potential) for p in sorted(p_range)]
	negative = tuple(point for point in points if point.negative)
	logger.debug("censo capa: %d negativos de %d", len(negative), len(points))
	return CensusResult(negative=negative, scanned=len(points))


# ============================================================
# FUNCIONES DE ONDA
# ============================================================

def shell_wavefunction(
	coeffs: ShellCoefficients,
	sector: Sector,
	c1: complex,
	c2: complex,
	phi: ArrayLike,
) -> NDArray[np.complex128]:
	"""
	Solución general en un sector (sin factores en t y z).

	Clase I: e^{∓iAφ/2}(C₂e^{±i√Dφ/2} + C₁e^{∓i√Dφ/2}).
	Clase II: e^{∓iAφ/2}(C₁φ + C₂).

	Raises:
		RotorQMError: UNSUPPORTED_CLASS para la clase III
	"""
	values = np.asarray(phi, dtype=float)
	solution_class = coeffs.class_for(sector)
	sign = sector.sign
	envelope = np.exp(-sign * 0.5j * coeffs.a_coeff * values)

	if solution_class is SolutionClass.I:
		root = math.sqrt(coeffs.d_for(sector))
		return envelope * (
			c2 * np.exp(sign * 0.5j * root * values) + c1 * np.exp(-sign * 0.5j * root * values)
		)
	if solution_class is SolutionClass.II:
		return envelope * (c1 * values + c2)
	raise RotorQMError(
		ErrorCode.UNSUPPORTED_CLASS,
		"las soluciones de clase III solo se clasifican",
		sector=sector.value,
		discriminant=coeffs.d_for(sector),
	)


def shell_residual(
	coeffs: ShellCoefficients,
	sector: Sector,
	c1: complex,
	c2: complex,
	points: int = 64,
	step: float = 1e-3,
) -> float:
	"""
	Residuo relativo de ψ″ ± iAψ′ + Bψ = 0 por diferencias centrales de 4º orden.

	Returns:
		float: max|residuo| normalizado por la escala de los términos
	"""
	phi = np.linspace(0.0, 2.0 * math.pi, points)
	h = step

	def psi(shift: float) -> NDArray[np.complex128]:
		return shell_wavefunction(coeffs, sector, c1, c2, phi + shift)

	p2, p1, p0, m1, m2 = psi(2 * h), psi(h), psi(0.0), psi(-h), psi(-2 * h)
	first = (-p2 + 8.0 * p1 - 8.0 * m1 + m2) / (12.0 * h)
	second = (-p2 + 16.0 * p1 - 30.0 * p0 + 16.0 * m1 - m2) / (12.0 * h * h)

	a = coeffs.a_coeff
	b = coeffs.b_for(sector)
	residual = second + sector.sign * 1j * a * first + b * p0

	wavenumber = 0.5 * (abs(a) + math.sqrt(abs(coeffs.d_for(sector))))
	scale = (wavenumber ** 2 + abs(a) * wavenumber + abs(b) + 1.0) * max(float(np.max(np.abs(p0))), 1e-300)
	return float(np.max(np.abs(residual)) / scale)


__all__ = [
	"CensusResult",
	"InterferenceTrace",
	"ShellCoefficients",
	"ShellMomentum",
	"SolutionClass",
	"SpectrumFamily",
	"SpectrumPoint",
	"class2_energy",
	"classify",
	"classify_discriminant",
	"equivalent_flux_radius",
	"flux_equivalent_omega",
	"flux_spectrum",
	"geometric_potential",
	"negative_energy_census_shell",
	"omega_quantization",
	"periodic_cap_psi_energy",
	"periodic_cap_psi_momentum",
	"periodic_lower_psi_energy",
	"rotation_coefficient",
	"sector_interference",
	"shell_coefficients",
	"shell_residual",
	"shell_wavefunction",
	"spectrum_family",
]
