"""
Configuración de una ejecución de la CLI (RunConfig), presets y replay.

Un RunConfig es serializable por completo: se incrusta en la cabecera de
cada archivo de salida y `rotorqm replay <archivo>` lo vuelve a ejecutar.

Orden de precedencia de los parámetros:
1. DEFAULT_VALUES
2. Preset (solo parámetros no pasados por el usuario, nunca flags físicos)
3. Flags explícitos de la línea de comandos
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from ..core.errors import ErrorCode, RotorQMError
from ..core.frame import FluxSpec, Particle, RotatingFrame, get_particle, validate_frame
from ..core.settings import DATA_DIR


PRESETS_FILE = DATA_DIR / "presets.json"

# Flags que un preset nunca puede fijar
PHYSICS_FLAGS = frozenset({"include_geometric_potential", "normalize_modes", "paper_index_labels"})

# Parámetros de rotación: si el usuario pasa uno, el preset no aporta ninguno
ROTATION_KEYS = ("omega", "linear_velocity")

HEADER_CONFIG_PREFIX = "# config: "


@dataclass(frozen=True)
class RunConfig:
	"""Parámetros completos de una ejecución."""
	subcommand: str
	preset: Optional[str] = None
	# Sistema y partícula
	omega: Optional[float] = None
	linear_velocity: Optional[float] = None
	radius: float = 1e-05
	particle: str = "electron"
	mass: Optional[float] = None
	flux_ratio: float = 0.0
	k: float = 0.0
	# Números cuánticos y barridos
	n: int = 1
	s: int = 1
	p_min: int = -10
	p_max: int = 10
	n_max: int = 5
	s_max: int = 5
	bc: str = "both"
	bc_minus: Optional[str] = None
	sector: str = "plus"
	family: str = "all"
	series: str = "both"
	geometry: str = "shell"
	# Sagnac clásico
	frequency: Optional[float] = None
	path_lobes: int = 3
	path_amplitude: float = 0.0
	trace: bool = False
	# Interferencia
	c_plus: str = "1"
	c_minus: str = "1"
	same_sector: bool = False
	points: int = 64
	r_points: int = 5
	t_max: Optional[float] = None
	# Salida
	format: str = "csv"
	timestamp: bool = True
	# Flags físicos (siempre explícitos)
	include_geometric_potential: bool = False
	normalize_modes: bool = False
	paper_index_labels: bool = False

	def to_dict(self) -> Dict[str, Any]:
		return asdict(self)

	def to_json(self) -> str:
		"""JSON de una línea con claves ordenadas (estable entre ejecuciones)."""
		return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False)

	@classmethod
	def from_dict(cls, data: Mapping[str, Any]) -> "RunConfig":
		known = {f.name for f in fields(cls)}
		unknown = set(data) - known
		if unknown:
			raise RotorQMError(ErrorCode.INVALID_CONFIG, "claves desconocidas en la configuración", keys=",".join(sorted(unknown)))
		if "subcommand" not in data:
			raise RotorQMError(ErrorCode.INVALID_CONFIG, "falta el subcomando en la configuración")
		return cls(**dict(data))

	# ------------------------------------------------------------
	# Objetos físicos derivados
	# ------------------------------------------------------------

	def build_particle(self) -> Particle:
		base = get_particle(self.particle)
		if self.mass is None:
			return base
		return Particle(mass=self.mass, charge=base.charge, name="custom")

	def build_frame(self) -> RotatingFrame:
		if self.omega is not None and self.linear_velocity is not None:
			raise RotorQMError(ErrorCode.INVALID_CONFIG, "--omega y --linear-velocity son excluyentes")
		if self.linear_velocity is not None:
			frame = RotatingFrame.from_linear_velocity(self.linear_velocity, self.radius)
		else:
			frame = RotatingFrame(omega=0.0 if self.omega is None else self.omega, radius=self.radius)
		return validate_frame(frame)

	def build_flux(self) -> FluxSpec:
		return FluxSpec(self.flux_ratio)


# ============================================================
# PRESETS
# ============================================================

_PRESETS_CACHE: Optional[Dict[str, Dict[str, Any]]] = None


def load_presets(path: Path = PRESETS_FILE) -> Dict[str, Dict[str, Any]]:
	"""Presets desde data/presets.json (con caché)."""
	global _PRESETS_CACHE
	if _PRESETS_CACHE is not None and path == PRESETS_FILE:
		return _PRESETS_CACHE
	try:
		with path.open("r", encoding="utf-8") as handle:
			presets = json.load(handle)
	except (OSError, json.JSONDecodeError) as exc:
		raise RotorQMError(ErrorCode.INVALID_CONFIG, f"presets ilegibles: {path}", reason=str(exc)) from exc

	for name, preset in presets.items():
		forbidden = PHYSICS_FLAGS & set(preset.get("values", {}))
		if forbidden:
			raise RotorQMError(
				ErrorCode.INVALID_CONFIG,
				f"el preset {name} no puede fijar flags físicos",
				flags=",".join(sorted(forbidden)),
			)
	if path == PRESETS_FILE:
		_PRESETS_CACHE = presets
	return presets


def resolve_config(subcommand: str, explicit: Mapping[str, Any], preset: Optional[str] = None) -> RunConfig:
	"""
	Combina defaults, preset y flags explícitos en un RunConfig.

	Args:
		subcommand: Nombre canónico del subcomando
		explicit: Parámetros que el usuario pasó (los ausentes no aparecen)
		preset: Nombre del preset (fig1, fig2, eq86) o None

	Returns:
		RunConfig: Configuración resuelta
	"""
	values: Dict[str, Any] = {}
	if preset is not None:
		presets = load_presets()
		if preset not in presets:
			raise RotorQMError(ErrorCode.INVALID_CONFIG, f"preset desconocido: {preset}", preset=preset)
		preset_values = dict(presets[preset]["values"])
		if any(key in explicit for key in ROTATION_KEYS):
			for key in ROTATION_KEYS:
				preset_values.pop(key, None)
		values.update(preset_values)

	values.update(explicit)
	values["subcommand"] = subcommand
	values["preset"] = preset
	return RunConfig.from_dict(values)


# ============================================================
# REPLAY
# ============================================================

def read_config_from_output(path: Path) -> RunConfig:
	"""
	Recupera el RunConfig incrustado en un archivo de salida (CSV o JSON).

	Raises:
		RotorQMError: IO_ERROR si no se puede leer; INVALID_CONFIG si no hay cabecera
	"""
	try:
		text = Path(path).read_text(encoding="utf-8")
	except OSError as exc:
		raise RotorQMError(ErrorCode.IO_ERROR, f"no se pudo leer {path}", reason=str(exc)) from exc

	if text.lstrip().startswith("{"):
		try:
			document = json.loads(text)
			return RunConfig.from_dict(document["meta"]["config"])
		except (json.JSONDecodeError, KeyError, TypeError) as exc:
			raise RotorQMError(ErrorCode.INVALID_CONFIG, "JSON sin meta.config", path=str(path)) from exc

	for line in text.splitlines():
		if line.startswith(HEADER_CONFIG_PREFIX):
			try:
				return RunConfig.from_dict(json.loads(line[len(HEADER_CONFIG_PREFIX):]))
			except json.JSONDecodeError as exc:
				raise RotorQMError(ErrorCode.INVALID_CONFIG, "cabecera de configuración corrupta", path=str(path)) from exc
		if not line.startswith("#"):
			break
	raise RotorQMError(ErrorCode.INVALID_CONFIG, "el archivo no tiene cabecera de configuración", path=str(path))


__all__ = [
	"HEADER_CONFIG_PREFIX",
	"PHYSICS_FLAGS",
	"PRESETS_FILE",
	"RunConfig",
	"load_presets",
	"read_config_from_output",
	"resolve_config",
]
