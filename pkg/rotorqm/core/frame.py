"""
Tipos de parámetros compartidos: sistema en rotación, partícula, flujo y modos.

Todos los tipos son valores inmutables (dataclasses congeladas) que se
serializan con to_dict()/from_dict() sin pérdida: los floats pasan por JSON
con su repr exacta.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Any, Dict, Mapping

from .constants import CONSTANTS
from .errors import ErrorCode, RotorQMError


# ============================================================
# ENUMERACIONES
# ============================================================

class Sector(str, Enum):
	"""Sector del espacio de estados: H₊ o su imagen reflejada H₋."""
	PLUS = "PLUS"
	MINUS = "MINUS"

	@property
	def sign(self) -> int:
		return 1 if self is Sector.PLUS else -1

	def reflected(self) -> "Sector":
		return Sector.MINUS if self is Sector.PLUS else Sector.PLUS


class BoundaryCondition(str, Enum):
	"""Condición de contorno en r = R₀."""
	DIRICHLET = "DIRICHLET"
	NEUMANN = "NEUMANN"
	NONE = "NONE"


def _require_finite(name: str, value: float) -> None:
	if not math.isfinite(value):
		raise RotorQMError(ErrorCode.NONFINITE_VALUE, f"{name} debe ser finito", **{name: value})


# ============================================================
# SISTEMA EN ROTACIÓN
# ============================================================

@dataclass(frozen=True)
class RotatingFrame:
	"""Velocidad angular Ω (rad/s, con signo) y radio R₀ (m) del cilindro."""
	omega: float
	radius: float

	def __post_init__(self) -> None:
		_require_finite("omega", self.omega)
		_require_finite("radius", self.radius)

	@classmethod
	def from_linear_velocity(cls, velocity: float, radius: float) -> "RotatingFrame":
		"""Frame con Ω = v / R₀ (v con signo, como v = R₀Ω)."""
		if not radius > 0.0:
			raise RotorQMError(ErrorCode.NONPOSITIVE_RADIUS, "el radio debe ser positivo", radius=radius)
		return cls(omega=velocity / radius, radius=radius)

	@property
	def linear_speed(self) -> float:
		"""v = ΩR₀ (m/s, con signo)."""
		return self.omega * self.radius

	def reflected(self) -> "RotatingFrame":
		"""Imagen bajo φ → −φ: equivale a Ω → −Ω."""
		return RotatingFrame(omega=-self.omega, radius=self.radius)

	def to_dict(self) -> Dict[str, Any]:
		return asdict(self)

	@classmethod
	def from_dict(cls, data: Mapping[str, Any]) -> "RotatingFrame":
		return cls(omega=float(data["omega"]), radius=float(data["radius"]))


def validate_frame(frame: RotatingFrame) -> RotatingFrame:
	"""
	Verifica que el frame tenga una métrica bien definida (|Ω|R₀ < c).

	Args:
		frame: Sistema en rotación a validar

	Returns:
		RotatingFrame: El mismo frame, sin cambios (la velocidad lineal
		está disponible en `frame.linear_speed`)

	Raises:
		RotorQMError: NONPOSITIVE_RADIUS o SUPERLUMINAL_RIM
	"""
	if not frame.radius > 0.0:
		raise RotorQMError(ErrorCode.NONPOSITIVE_RADIUS, "el radio debe ser positivo", radius=frame.radius)
	if abs(frame.omega) * frame.radius >= CONSTANTS.c:
		raise RotorQMError(
			ErrorCode.SUPERLUMINAL_RIM,
			"el borde del cilindro supera la velocidad de la luz",
			omega=frame.omega,
			radius=frame.radius,
			linear_speed=frame.linear_speed,
		)
	return frame


# ============================================================
# PARTÍCULA
# ============================================================

@dataclass(frozen=True)
class Particle:
	"""Masa en reposo m₀ (kg) y carga eléctrica (C)."""
	mass: float
	charge: float = 0.0
	name: str = "custom"

	def __post_init__(self) -> None:
		_require_finite("mass", self.mass)
		_require_finite("charge", self.charge)
		if not self.mass > 0.0:
			raise RotorQMError(ErrorCode.NONPOSITIVE_MASS, "la masa debe ser positiva", mass=self.mass)

	def to_dict(self) -> Dict[str, Any]:
		return asdict(self)

	@classmethod
	def from_dict(cls, data: Mapping[str, Any]) -> "Particle":
		return cls(mass=float(data["mass"]), charge=float(data.get("charge", 0.0)), name=str(data.get("name", "custom")))


ELECTRON = Particle(mass=CONSTANTS.m_electron, charge=-CONSTANTS.e_charge, name="electron")
NEUTRON = Particle(mass=CONSTANTS.m_neutron, charge=0.0, name="neutron")
PROTON = Particle(mass=CONSTANTS.m_proton, charge=CONSTANTS.e_charge, name="proton")

PARTICLE_PRESETS: Dict[str, Particle] = {
	"electron": ELECTRON,
	"neutron": NEUTRON,
	"proton": PROTON,
}


def get_particle(name: str) -> Particle:
	"""Partícula predefinida por nombre (electron, neutron, proton)."""
	try:
		return PARTICLE_PRESETS[name.lower()]
	except KeyError:
		raise RotorQMError(ErrorCode.INVALID_CONFIG, f"partícula desconocida: {name}", particle=name) from None


# ============================================================
# FLUJO MAGNÉTICO
# ============================================================

@dataclass(frozen=True)
class FluxSpec:
	"""
	Flujo magnético a lo largo del eje, como cociente adimensional Φ/Φ_L.

	Los espectros solo dependen del cociente. El valor absoluto del flujo
	depende de la convención de unidades del cuanto de flujo.
	"""
	flux_ratio: float = 0.0

	def __post_init__(self) -> None:
		_require_finite("flux_ratio", self.flux_ratio)

	@property
	def flux_quantum(self) -> float:
		"""Φ_L en SI (Wb): 2πℏ/e."""
		return 2.0 * math.pi * CONSTANTS.hbar / CONSTANTS.e_charge

	@property
	def flux(self) -> float:
		"""Flujo total Φ (Wb) en la convención SI."""
		return self.flux_ratio * self.flux_quantum

	def to_dict(self) -> Dict[str, Any]:
		return asdict(self)

	@classmethod
	def from_dict(cls, data: Mapping[str, Any]) -> "FluxSpec":
		return cls(flux_ratio=float(data["flux_ratio"]))


NO_FLUX = FluxSpec(0.0)


# ============================================================
# MODOS
# ============================================================

@dataclass(frozen=True)
class ModeSpec:
	"""
	Números cuánticos de un estado.

	angular_qn es m, p o n según la familia del espectro; radial_index es
	el ordinal s del cero (0 cuando no hay condición de contorno radial).
	"""
	sector: Sector
	angular_qn: int
	axial_k: float = 0.0
	radial_index: int = 0
	bc: BoundaryCondition = BoundaryCondition.NONE

	def __post_init__(self) -> None:
		_require_finite("axial_k", self.axial_k)
		if self.bc is not BoundaryCondition.NONE and self.radial_index < 1:
			raise RotorQMError(
				ErrorCode.INDEX_OUT_OF_RANGE,
				"radial_index >= 1 cuando hay condición de contorno",
				radial_index=self.radial_index,
				bc=self.bc.value,
			)

	def to_dict(self) -> Dict[str, Any]:
		return {
			"sector": self.sector.value,
			"angular_qn": self.angular_qn,
			"axial_k": self.axial_k,
			"radial_index": self.radial_index,
			"bc": self.bc.value,
		}

	@classmethod
	def from_dict(cls, data: Mapping[str, Any]) -> "ModeSpec":
		return cls(
			sector=Sector(data["sector"]),
			angular_qn=int(data["angular_qn"]),
			axial_k=float(data.get("axial_k", 0.0)),
			radial_index=int(data.get("radial_index", 0)),
			bc=BoundaryCondition(data.get("bc", "NONE")),
		)


# ============================================================
# ESCALAS
# ============================================================

def characteristic_energy(particle: Particle, frame: RotatingFrame) -> float:
	"""
	Energía característica del cilindro B_R = ℏ²/(2m₀R₀²) en J.

	Args:
		particle: Partícula
		frame: Sistema en rotación (solo se usa el radio)

	Returns:
		float: B_R (J)
	"""
	validate_frame(frame)
	return radius_energy(particle, frame.radius)


def radius_energy(particle: Particle, radius: float) -> float:
	"""B_R para un radio arbitrario (sin exigir un frame)."""
	if not radius > 0.0:
		raise RotorQMError(ErrorCode.NONPOSITIVE_RADIUS, "el radio debe ser positivo", radius=radius)
	return CONSTANTS.hbar ** 2 / (2.0 * particle.mass * radius ** 2)


__all__ = [
	"BoundaryCondition",
	"ELECTRON",
	"FluxSpec",
	"ModeSpec",
	"NEUTRON",
	"NO_FLUX",
	"PARTICLE_PRESETS",
	"PROTON",
	"Particle",
	"RotatingFrame",
	"Sector",
	"characteristic_energy",
	"get_particle",
	"radius_energy",
	"validate_frame",
]
