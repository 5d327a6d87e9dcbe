"""
Configuración numérica (tolerancias de raíces y cuadratura).

Orden de precedencia:
1. DEFAULT_SETTINGS (valores incorporados)
2. rotorqm/data/settings.json (si existe)
3. ROTORQM_PRECISION del entorno o de un archivo .env (pisa root_xtol y quad_rtol)
"""
from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, asdict
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import find_dotenv, load_dotenv

from .errors import ErrorCode, RotorQMError


DATA_DIR = Path(__file__).resolve().parents[1] / "data"
SETTINGS_FILE = DATA_DIR / "settings.json"
PRECISION_ENV = "ROTORQM_PRECISION"


DEFAULT_SETTINGS: Dict[str, Any] = {
	"root_xtol": 1e-15,
	"root_rtol": 8.881784197001252e-16,
	"quad_rtol": 1e-12,
	"quad_nodes": 32,
	"quad_max_panels": 4096,
	"class2_tolerance": 1e-9,
}


@dataclass(frozen=True)
class Settings:
	"""Instantánea inmutable de la configuración numérica."""
	root_xtol: float
	root_rtol: float
	quad_rtol: float
	quad_nodes: int
	quad_max_panels: int
	class2_tolerance: float
	precision_override: Optional[float] = None

	def to_dict(self) -> Dict[str, Any]:
		return asdict(self)


_settings_cache: Optional[Settings] = None


def _load_file(path: Path) -> Dict[str, Any]:
	if not path.exists():
		return dict(DEFAULT_SETTINGS)
	try:
		with path.open("r", encoding="utf-8") as handle:
			data = json.load(handle)
	except (json.JSONDecodeError, OSError) as exc:
		raise RotorQMError(ErrorCode.INVALID_CONFIG, f"settings ilegible: {path}", reason=str(exc)) from exc
	unknown = set(data) - set(DEFAULT_SETTINGS)
	if unknown:
		raise RotorQMError(ErrorCode.INVALID_CONFIG, "claves desconocidas en settings", keys=",".join(sorted(unknown)))
	return {**DEFAULT_SETTINGS, **data}


def _parse_precision(raw: str) -> float:
	try:
		value = float(raw)
	except ValueError as exc:
		raise RotorQMError(ErrorCode.INVALID_CONFIG, f"{PRECISION_ENV} no es un número", value=raw) from exc
	if not math.isfinite(value) or value <= 0.0:
		raise RotorQMError(ErrorCode.INVALID_CONFIG, f"{PRECISION_ENV} debe ser positivo y finito", value=raw)
	return value


def load_settings(path: Path = SETTINGS_FILE, env_file: Optional[Path] = None) -> Settings:
	"""
	Construye los Settings desde defaults, archivo JSON y entorno.

	Args:
		path: Archivo JSON de settings
		env_file: Archivo .env opcional (por defecto se busca en el directorio actual)

	Returns:
		Settings: Configuración lista para usar
	"""
	values = _load_file(path)
	load_dotenv(env_file or find_dotenv(usecwd=True), override=False)

	override = None
	raw = os.getenv(PRECISION_ENV)
	if raw:
		override = _parse_precision(raw)
		values["root_xtol"] = override
		values["quad_rtol"] = override

	return Settings(
		root_xtol=float(values["root_xtol"]),
		root_rtol=float(values["root_rtol"]),
		quad_rtol=float(values["quad_rtol"]),
		quad_nodes=int(values["quad_nodes"]),
		quad_max_panels=int(values["quad_max_panels"]),
		class2_tolerance=float(values["class2_tolerance"]),
		precision_override=override,
	)


def get_settings() -> Settings:
	"""Obtiene la configuración global (se carga una sola vez)."""
	global _settings_cache
	if _settings_cache is None:
		_settings_cache = load_settings()
	return _settings_cache


def reload_settings() -> Settings:
	"""Descarta la configuración en caché y la vuelve a cargar."""
	global _settings_cache
	_settings_cache = None
	return get_settings()


__all__ = ["Settings", "DEFAULT_SETTINGS", "PRECISION_ENV", "get_settings", "load_settings", "reload_settings"]
