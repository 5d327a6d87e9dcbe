"""
Errores de rotorqm.

Cada error lleva un código estable (ErrorCode) que la CLI emite como
registro JSON legible por máquinas.

Uso:
    from rotorqm.core.errors import ErrorCode, RotorQMError
    raise RotorQMError(ErrorCode.SUPERLUMINAL_RIM, "|Ω|R₀ >= c", omega=omega, radius=radius)
"""
from __future__ import annotations

from typing import Any, Dict


class ErrorCode:
	"""Códigos de error disponibles"""
	SUPERLUMINAL_RIM = "SUPERLUMINAL_RIM"
	NONPOSITIVE_RADIUS = "NONPOSITIVE_RADIUS"
	NONPOSITIVE_MASS = "NONPOSITIVE_MASS"
	NONFINITE_VALUE = "NONFINITE_VALUE"
	ORDER_OUT_OF_RANGE = "ORDER_OUT_OF_RANGE"
	NEGATIVE_ARGUMENT = "NEGATIVE_ARGUMENT"
	INDEX_OUT_OF_RANGE = "INDEX_OUT_OF_RANGE"
	ROOT_NOT_BRACKETED = "ROOT_NOT_BRACKETED"
	OPEN_PATH = "OPEN_PATH"
	R_OUT_OF_RANGE = "R_OUT_OF_RANGE"
	UNSUPPORTED_CLASS = "UNSUPPORTED_CLASS"
	INVALID_ARGUMENT = "INVALID_ARGUMENT"
	INVALID_CONFIG = "INVALID_CONFIG"
	IO_ERROR = "IO_ERROR"


class ResultFlag:
	"""Condiciones informativas (no fatales) que se adjuntan a los resultados"""
	SECTOR_MISMATCH_FLAG = "SECTOR_MISMATCH_FLAG"
	NO_SAGNAC = "NO_SAGNAC"
	TIME_DEPENDENT = "TIME_DEPENDENT"
	UNSUPPORTED_FOR_SOLVE = "UNSUPPORTED_FOR_SOLVE"


class RotorQMError(ValueError):
	"""Error de dominio con código estable y detalles serializables."""

	def __init__(self, code: str, message: str, **details: Any):
		super().__init__(f"{code}: {message}")
		self.code = code
		self.message = message
		self.details = details

	def to_record(self) -> Dict[str, Any]:
		"""Registro JSON que la CLI escribe al fallar."""
		return {
			"error": self.code,
			"message": self.message,
			"details": {key: _jsonable(value) for key, value in self.details.items()},
		}


def _jsonable(value: Any) -> Any:
	if isinstance(value, (int, float, str, bool)) or value is None:
		return value
	return repr(value)


__all__ = ["ErrorCode", "ResultFlag", "RotorQMError"]
