"""
Efecto Sagnac clásico y fase semiclásica en el sistema en rotación.

Incluye el factor γ de la métrica rotante, el tiempo propio, los tiempos
de ida y vuelta (exacto y a primer orden), la integración sobre caminos
cerrados arbitrarios, el momento canónico y la fase de circulación.

Uso:
    from rotorqm.core import RotatingFrame
    from rotorqm.physics.classical import roundtrip_delta_t, ClosedPath, path_delta_t

    frame = RotatingFrame(omega=100.0, radius=0.1)
    roundtrip_delta_t(frame).direct_delta_t        # 1.3982e-16 s
    path_delta_t(frame, ClosedPath.flower(1.0, 0.3, 3)).delta_t
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from functools import cached_property
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.interpolate import CubicSpline

from ..core.constants import CONSTANTS
from ..core.errors import ErrorCode, RotorQMError
from ..core.frame import Particle, RotatingFrame, validate_frame
from ..core.run_logging import get_logger
from .quadrature import integrate


logger = get_logger("classical")

TWO_PI = 2.0 * math.pi

# Tolerancias de cierre de un camino muestreado
_SPAN_TOLERANCE = 1e-12
_CLOSURE_TOLERANCE = 1e-12

# Malla para el máximo de un camino analítico
_DENSE_SAMPLES = 4096

RadiusFunction = Callable[[NDArray[np.float64]], NDArray[np.float64]]


# ============================================================
# FACTOR γ Y TIEMPO PROPIO
# ============================================================

def _check_rim(frame: RotatingFrame, r: float) -> float:
	if not math.isfinite(r) or r < 0.0:
		raise RotorQMError(ErrorCode.NONPOSITIVE_RADIUS, "r debe ser >= 0 y finito", r=r)
	beta = frame.omega * r / CONSTANTS.c
	if abs(beta) >= 1.0:
		raise RotorQMError(
			ErrorCode.SUPERLUMINAL_RIM,
			"|Ω|r >= c: la métrica no está definida",
			omega=frame.omega,
			r=r,
		)
	return beta


def gamma_factor(frame: RotatingFrame, r: float) -> float:
	"""
	γ = √(1 − Ω²r²/c²) a distancia r del eje.

	Args:
		frame: Sistema en rotación
		r: Distancia al eje (m)

	Returns:
		float: 0 < γ <= 1
	"""
	beta = _check_rim(frame, r)
	return math.sqrt(1.0 - beta * beta)


def _gamma_array(omega: float, r: NDArray[np.float64]) -> NDArray[np.float64]:
	beta = omega * r / CONSTANTS.c
	return np.sqrt(1.0 - beta * beta)


def proper_time(frame: RotatingFrame, r: float, delta_t_global: float, delta_phi: float) -> float:
	"""
	Tiempo propio (s) de un observador a radio r fijo.

	T = γΔt + Ωr²Δφ/(c²γ). Es lineal en Δt y en Δφ.
	"""
	gamma = gamma_factor(frame, r)
	c = CONSTANTS.c
	return gamma * delta_t_global + frame.omega * r * r * delta_phi / (c * c * gamma)


def proper_time_reflection_asymmetry(
	frame: RotatingFrame,
	r: float,
	delta_t_global: float,
	delta_phi: float,
) -> float:
	"""T(Δt, Δφ) − T(Δt, −Δφ) = 2Ωr²Δφ/(c²γ): T no es invariante bajo φ → −φ."""
	return proper_time(frame, r, delta_t_global, delta_phi) - proper_time(frame, r, delta_t_global, -delta_phi)


# ============================================================
# RESULTADOS DE TIEMPO
# ============================================================

@dataclass(frozen=True)
class TimingResult:
	"""
	Tiempos globales de ida (cw, sentido −φ) y vuelta (ccw, sentido +φ).

	delta_t es t_ccw − t_cw tal como quedan guardados, así que su resolución
	está limitada por ulp(t_cw). direct_delta_t es la diferencia integrada
	directamente (sin esa pérdida) y es la que se compara con la ley de área.
	"""
	t_cw: float
	t_ccw: float
	delta_t: float
	direct_delta_t: float
	gamma_profile: Tuple[float, ...]
	enclosed_area: float
	leading_order: float
	signal_speed: float

	@property
	def higher_order_residual(self) -> float:
		"""Diferencia con la ley de área a primer orden (4ΩA/c²)."""
		return self.direct_delta_t - self.leading_order

	def to_dict(self) -> Dict[str, Any]:
		data = asdict(self)
		data["gamma_profile"] = list(self.gamma_profile)
		data["higher_order_residual"] = self.higher_order_residual
		return data


@dataclass(frozen=True)
class ClassicalSignal:
	"""Señal de frecuencia ν (Hz) que recorre el camino."""
	frequency: float

	def __post_init__(self) -> None:
		if not (math.isfinite(self.frequency) and self.frequency > 0.0):
			raise RotorQMError(ErrorCode.INVALID_ARGUMENT, "la frecuencia debe ser positiva", frequency=self.frequency)


def _check_signal_speed(signal_speed: Optional[float]) -> float:
	speed = CONSTANTS.c if signal_speed is None else float(signal_speed)
	if not (math.isfinite(speed) and 0.0 < speed <= CONSTANTS.c):
		raise RotorQMError(ErrorCode.INVALID_ARGUMENT, "0 < velocidad de la señal <= c", signal_speed=speed)
	return speed


def roundtrip_delta_t(frame: RotatingFrame, r: Optional[float] = None, signal_speed: Optional[float] = None) -> TimingResult:
	"""
	Diferencia exacta de tiempos en un círculo de radio r.

	direct_delta_t = 4πΩr²/(c²γ²), con Ω con signo (antisimétrica bajo Ω → −Ω);
	delta_t es la diferencia de las duraciones guardadas.

	Args:
		frame: Sistema en rotación
		r: Radio del círculo (por defecto R₀)
		signal_speed: Velocidad propia de la señal (por defecto c)

	Returns:
		TimingResult: Tiempos cw/ccw y su diferencia
	"""
	validate_frame(frame)
	radius = frame.radius if r is None else float(r)
	if not radius > 0.0:
		raise RotorQMError(ErrorCode.NONPOSITIVE_RADIUS, "el radio debe ser positivo", r=radius)
	beta = _check_rim(frame, radius)
	speed = _check_signal_speed(signal_speed)

	c = CONSTANTS.c
	gamma2 = 1.0 - beta * beta
	gamma = math.sqrt(gamma2)
	# Por unidad de ángulo: (r/(uγ) ∓ Ωr²/(c²γ))/γ
	base = radius / (speed * gamma2)
	coupling = frame.omega * radius * radius / (c * c * gamma2)
	area = math.pi * radius * radius

	t_cw = TWO_PI * (base - coupling)
	t_ccw = TWO_PI * (base + coupling)
	return TimingResult(
		t_cw=t_cw,
		t_ccw=t_ccw,
		delta_t=t_ccw - t_cw,
		direct_delta_t=4.0 * math.pi * coupling,
		gamma_profile=(gamma,),
		enclosed_area=area,
		leading_order=4.0 * frame.omega * area / (c * c),
		signal_speed=speed,
	)


def leading_order_delta_t(frame: RotatingFrame, area: float) -> float:
	"""Δt ≈ 4Ω𝒜/c² para un área encerrada 𝒜 > 0 (m²)."""
	if not (math.isfinite(area) and area > 0.0):
		raise RotorQMError(ErrorCode.INVALID_ARGUMENT, "el área debe ser positiva", area=area)
	return 4.0 * frame.omega * area / (CONSTANTS.c * CONSTANTS.c)


def classical_sagnac_phase(signal: ClassicalSignal, delta_t: float) -> float:
	"""Δφ = 2πνΔt (rad)."""
	return TWO_PI * signal.frequency * delta_t


# ============================================================
# CAMINOS CERRADOS
# ============================================================

@dataclass(frozen=True, eq=False)
class ClosedPath:
	"""
	Camino cerrado r(φ) que rodea el origen, con φ recorriendo 2π.

	Se construye desde muestras (interpolación cúbica periódica) o desde
	una función analítica. Usar los constructores de clase, que validan.
	"""
	phi: Tuple[float, ...]
	r: Tuple[float, ...]
	label: str = "sampled"
	radius_function: Optional[RadiusFunction] = None
	radius_derivative: Optional[RadiusFunction] = None

	@classmethod
	def from_samples(cls, phi: Sequence[float], r: Sequence[float], label: str = "sampled") -> "ClosedPath":
		"""
		Camino desde muestras (φᵢ, rᵢ).

		Raises:
			RotorQMError: OPEN_PATH si φ no es creciente, no cubre 2π o r no cierra;
				NONPOSITIVE_RADIUS si algún rᵢ <= 0
		"""
		phi_arr = np.array(phi, dtype=float)
		r_arr = np.array(r, dtype=float)
		if phi_arr.ndim != 1 or phi_arr.shape != r_arr.shape or phi_arr.size < 4:
			raise RotorQMError(ErrorCode.OPEN_PATH, "se necesitan al menos 4 muestras (φ, r) pareadas")
		if not (np.all(np.isfinite(phi_arr)) and np.all(np.isfinite(r_arr))):
			raise RotorQMError(ErrorCode.NONFINITE_VALUE, "muestras no finitas")
		if np.any(np.diff(phi_arr) <= 0.0):
			raise RotorQMError(ErrorCode.OPEN_PATH, "φ debe ser estrictamente creciente")
		span = phi_arr[-1] - phi_arr[0]
		if abs(span - TWO_PI) > _SPAN_TOLERANCE * TWO_PI:
			raise RotorQMError(ErrorCode.OPEN_PATH, "φ debe recorrer exactamente 2π", span=float(span))
		if np.any(r_arr <= 0.0):
			raise RotorQMError(ErrorCode.NONPOSITIVE_RADIUS, "el camino toca el eje", r_min=float(r_arr.min()))
		if abs(r_arr[-1] - r_arr[0]) > _CLOSURE_TOLERANCE * max(1.0, float(r_arr.max())):
			raise RotorQMError(
				ErrorCode.OPEN_PATH,
				"el camino no cierra",
				r_first=float(r_arr[0]),
				r_last=float(r_arr[-1]),
			)
		r_arr[-1] = r_arr[0]
		return cls(phi=tuple(phi_arr.tolist()), r=tuple(r_arr.tolist()), label=label)

	@classmethod
	def analytic(
		cls,
		radius_function: RadiusFunction,
		radius_derivative: Optional[RadiusFunction] = None,
		phi_start: float = 0.0,
		samples: int = 257,
		label: str = "analytic",
	) -> "ClosedPath":
		"""Camino desde una función r(φ) vectorizada (y opcionalmente r′(φ))."""
		phi_arr = np.linspace(phi_start, phi_start + TWO_PI, samples)
		r_arr = np.asarray(radius_function(phi_arr), dtype=float)
		sampled = cls.from_samples(phi_arr, r_arr, label=label)
		return cls(
			phi=sampled.phi,
			r=sampled.r,
			label=label,
			radius_function=radius_function,
			radius_derivative=radius_derivative,
		)

	@classmethod
	def circle(cls, radius: float) -> "ClosedPath":
		return cls.analytic(
			lambda phi: np.full_like(phi, radius, dtype=float),
			lambda phi: np.zeros_like(phi, dtype=float),
			label=f"circle(r={radius!r})",
		)

	@classmethod
	def flower(cls, radius: float, amplitude: float, lobes: int) -> "ClosedPath":
		"""r(φ) = R(1 + a·sin(kφ)), con |a| < 1."""
		if not abs(amplitude) < 1.0:
			raise RotorQMError(ErrorCode.NONPOSITIVE_RADIUS, "|a| < 1 para no tocar el eje", amplitude=amplitude)
		return cls.analytic(
			lambda phi: radius * (1.0 + amplitude * np.sin(lobes * phi)),
			lambda phi: radius * amplitude * lobes * np.cos(lobes * phi),
			label=f"flower(r={radius!r}, a={amplitude!r}, k={lobes})",
		)

	@property
	def phi_start(self) -> float:
		return self.phi[0]

	@cached_property
	def r_max(self) -> float:
		"""
		Máximo de r(φ) sobre todo el camino, no solo en las muestras.

		Spline: extremos en las raíces de r′. Función analítica: malla de
		_DENSE_SAMPLES puntos, así que un pico más estrecho que esa malla
		puede quedar subestimado.
		"""
		candidates = [np.asarray(self.r)]
		if self.radius_function is None:
			critical = self._spline.derivative().roots(extrapolate=False)
			critical = critical[np.isfinite(critical)]
			if critical.size:
				candidates.append(np.asarray(self._spline(critical), dtype=float))
		else:
			dense = np.linspace(self.phi_start, self.phi_start + TWO_PI, _DENSE_SAMPLES)
			candidates.append(self.radius_at(dense))
		return float(np.max(np.concatenate(candidates)))

	@cached_property
	def _spline(self) -> CubicSpline:
		return CubicSpline(np.asarray(self.phi), np.asarray(self.r), bc_type="periodic")

	def radius_at(self, phi: ArrayLike) -> NDArray[np.float64]:
		"""r(φ), por función analítica o spline periódico."""
		values = np.asarray(phi, dtype=float)
		if self.radius_function is not None:
			return np.asarray(self.radius_function(values), dtype=float)
		return np.asarray(self._spline(values), dtype=float)

	def derivative_at(self, phi: ArrayLike) -> NDArray[np.float64]:
		"""r′(φ); diferencias centrales si la función analítica no trae derivada."""
		values = np.asarray(phi, dtype=float)
		if self.radius_derivative is not None:
			return np.asarray(self.radius_derivative(values), dtype=float)
		if self.radius_function is not None:
			h = 1e-6
			return (self.radius_function(values + h) - self.radius_function(values - h)) / (2.0 * h)
		return np.asarray(self._spline(values, 1), dtype=float)


def reflect_path(path: ClosedPath) -> ClosedPath:
	"""Imagen del camino bajo φ → −φ (misma área, recorrido invertido)."""
	phi = tuple(-value for value in reversed(path.phi))
	r = tuple(reversed(path.r))
	if path.radius_function is None:
		return ClosedPath(phi=phi, r=r, label=f"reflected({path.label})")

	func = path.radius_function
	derivative = path.radius_derivative
	return ClosedPath(
		phi=phi,
		r=r,
		label=f"reflected({path.label})",
		radius_function=lambda values: func(-values),
		radius_derivative=None if derivative is None else (lambda values: -derivative(-values)),
	)


def path_delta_t(frame: RotatingFrame, path: ClosedPath, signal_speed: Optional[float] = None) -> TimingResult:
	"""
	Tiempos de ida y vuelta sobre un camino cerrado arbitrario.

	Por unidad de ángulo: dt = (dℓ/u ∓ Ωr²/(c²γ))/γ con dℓ = √(r′² + r²/γ²).
	La diferencia se integra directamente (direct_delta_t = ∮ 2Ωr²/(c²γ²) dφ).
	La condición de borde usa el máximo de r(φ) entre muestras (ver r_max).

	Args:
		frame: Sistema en rotación
		path: Camino cerrado
		signal_speed: Velocidad propia de la señal (por defecto c)

	Returns:
		TimingResult: Tiempos, γ en las muestras, área encerrada y ley de área

	Raises:
		RotorQMError: SUPERLUMINAL_RIM si |Ω|r_max >= c
	"""
	validate_frame(frame)
	_check_rim(frame, path.r_max)
	speed = _check_signal_speed(signal_speed)
	c2 = CONSTANTS.c ** 2
	omega = frame.omega
	a, b = path.phi_start, path.phi_start + TWO_PI

	def coupling(phi: NDArray[np.float64]) -> NDArray[np.float64]:
		r = path.radius_at(phi)
		gamma = _gamma_array(omega, r)
		return omega * r * r / (c2 * gamma * gamma)

	def transit(phi: NDArray[np.float64]) -> NDArray[np.float64]:
		r = path.radius_at(phi)
		dr = path.derivative_at(phi)
		gamma = _gamma_array(omega, r)
		return np.sqrt(dr * dr + (r / gamma) ** 2) / (speed * gamma)

	half_area = integrate(lambda phi: path.radius_at(phi) ** 2, a, b)
	area = 0.5 * half_area.value
	mean_transit = integrate(transit, a, b).value
	sagnac = integrate(coupling, a, b).value

	gamma_profile = _gamma_array(omega, np.asarray(path.r))
	logger.debug("path_delta_t %s: área=%.6e, Δt=%.6e", path.label, area, 2.0 * sagnac)

	t_cw = mean_transit - sagnac
	t_ccw = mean_transit + sagnac
	return TimingResult(
		t_cw=t_cw,
		t_ccw=t_ccw,
		delta_t=t_ccw - t_cw,
		direct_delta_t=2.0 * sagnac,
		gamma_profile=tuple(gamma_profile.tolist()),
		enclosed_area=area,
		leading_order=4.0 * omega * area / c2,
		signal_speed=speed,
	)


def path_trace(frame: RotatingFrame, path: ClosedPath, points: int = 64) -> List[Dict[str, float]]:
	"""
	Traza (phi, r, dT_contribution) en una malla uniforme de `points` ángulos.

	Cada contribución es 2Ωr²/(c²γ²)·Δφ; su suma aproxima Δt (regla del
	trapecio periódica).
	"""
	if points < 4:
		raise RotorQMError(ErrorCode.INVALID_ARGUMENT, "points >= 4", points=points)
	validate_frame(frame)
	_check_rim(frame, path.r_max)
	step = TWO_PI / points
	phi = path.phi_start + step * np.arange(points)
	r = path.radius_at(phi)
	gamma = _gamma_array(frame.omega, r)
	contribution = 2.0 * frame.omega * r * r / (CONSTANTS.c ** 2 * gamma * gamma) * step
	return [
		{"phi": float(p), "r": float(radius), "dT_contribution": float(value)}
		for p, radius, value in zip(phi, r, contribution)
	]


# ============================================================
# MOMENTO CANÓNICO Y FASE CUÁNTICA
# ============================================================

@dataclass(frozen=True)
class CanonicalMomentum:
	"""Componentes físicas (P^r̂, P^φ̂, P^ẑ) en kg·m/s."""
	radial: float
	azimuthal: float
	axial: float

	def as_tuple(self) -> Tuple[float, float, float]:
		return (self.radial, self.azimuthal, self.axial)


def canonical_momentum(
	frame: RotatingFrame,
	particle: Particle,
	velocity: Tuple[float, float, float] = (0.0, 0.0, 0.0),
	r: Optional[float] = None,
) -> CanonicalMomentum:
	"""
	Momento canónico no relativista en el sistema en rotación.

	Args:
		frame: Sistema en rotación
		particle: Partícula
		velocity: (ṙ, φ̇, ż) medidas en el sistema en rotación
		r: Radio de evaluación (por defecto R₀)

	Returns:
		CanonicalMomentum: P^r̂ = m₀ṙ, P^φ̂ = m₀r(φ̇ + Ω), P^ẑ = m₀ż

	Raises:
		RotorQMError: NONPOSITIVE_RADIUS si r < 0 o no es finito; SUPERLUMINAL_RIM si |Ω|r >= c
	"""
	radius = frame.radius if r is None else float(r)
	_check_rim(validate_frame(frame), radius)
	r_dot, phi_dot, z_dot = velocity
	mass = particle.mass
	return CanonicalMomentum(
		radial=mass * r_dot,
		azimuthal=mass * radius * (phi_dot + frame.omega),
		axial=mass * z_dot,
	)


def circulation_phase(frame: RotatingFrame, particle: Particle, radius: Optional[float] = None) -> float:
	"""Δφ_q = 4m₀Ωπr²/ℏ para partículas que recorren un círculo en sentidos opuestos."""
	r = frame.radius if radius is None else float(radius)
	return 4.0 * particle.mass * frame.omega * math.pi * r * r / CONSTANTS.hbar


def de_broglie_wavelength(particle: Particle, speed: float) -> float:
	"""λ_B = 2πℏ/(m₀|v|)."""
	if not (math.isfinite(speed) and speed != 0.0):
		raise RotorQMError(ErrorCode.INVALID_ARGUMENT, "la velocidad debe ser no nula", speed=speed)
	return TWO_PI * CONSTANTS.hbar / (particle.mass * abs(speed))


def de_broglie_sagnac_phase(
	frame: RotatingFrame,
	wavelength: float,
	speed: float,
	area: float,
	half_circuit: bool = False,
) -> float:
	"""
	Fase Sagnac para ondas de materia: 8πΩ𝒜/(λ_B v).

	Con λ_B la longitud de de Broglie a velocidad v coincide con
	circulation_phase. half_circuit=True recombina tras media vuelta.
	"""
	if not (math.isfinite(wavelength) and wavelength > 0.0):
		raise RotorQMError(ErrorCode.INVALID_ARGUMENT, "λ_B debe ser positiva", wavelength=wavelength)
	if not (math.isfinite(speed) and speed > 0.0):
		raise RotorQMError(ErrorCode.INVALID_ARGUMENT, "la velocidad debe ser positiva", speed=speed)
	if not (math.isfinite(area) and area > 0.0):
		raise RotorQMError(ErrorCode.INVALID_ARGUMENT, "el área debe ser positiva", area=area)
	phase = 8.0 * math.pi * frame.omega * area / (wavelength * speed)
	return 0.5 * phase if half_circuit else phase


__all__ = [
	"CanonicalMomentum",
	"ClassicalSignal",
	"ClosedPath",
	"TimingResult",
	"canonical_momentum",
	"circulation_phase",
	"classical_sagnac_phase",
	"de_broglie_sagnac_phase",
	"de_broglie_wavelength",
	"gamma_factor",
	"leading_order_delta_t",
	"path_delta_t",
	"path_trace",
	"proper_time",
	"proper_time_reflection_asymmetry",
	"reflect_path",
	"roundtrip_delta_t",
]
