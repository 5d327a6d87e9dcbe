"""
Constantes físicas (CODATA 2018, SI).

La tabla se serializa en la cabecera de cada archivo de salida para que
los resultados queden ligados a los valores con los que se calcularon.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, fields
from typing import Dict


CODATA_EDITION = "CODATA 2018"


@dataclass(frozen=True)
class PhysicalConstants:
	"""Constantes usadas por todos los módulos (SI)."""
	c: float = 299792458.0
	hbar: float = 1.054571817e-34
	e_charge: float = 1.602176634e-19
	m_electron: float = 9.1093837015e-31
	m_neutron: float = 1.67492749804e-27
	m_proton: float = 1.67262192369e-27

	def __post_init__(self) -> None:
		for field in fields(self):
			value = getattr(self, field.name)
			if not value > 0.0:
				raise ValueError(f"constante no positiva: {field.name}={value!r}")


# Unidad y fuente de cada constante
_UNITS = {
	"c": ("m/s", "exact (SI 2019)"),
	"hbar": ("J*s", "derived from exact h (truncated)"),
	"e_charge": ("C", "exact (SI 2019)"),
	"m_electron": ("kg", CODATA_EDITION),
	"m_neutron": ("kg", CODATA_EDITION),
	"m_proton": ("kg", CODATA_EDITION),
}

CONSTANTS = PhysicalConstants()


def constants_table(constants: PhysicalConstants = CONSTANTS) -> Dict[str, Dict[str, object]]:
	"""Tabla clave -> {value, unit, source}."""
	table: Dict[str, Dict[str, object]] = {}
	for field in fields(constants):
		unit, source = _UNITS[field.name]
		table[field.name] = {"value": getattr(constants, field.name), "unit": unit, "source": source}
	return table


def constants_json(constants: PhysicalConstants = CONSTANTS) -> str:
	"""Tabla de constantes como JSON estable (claves ordenadas, una línea)."""
	return json.dumps(constants_table(constants), sort_keys=True, ensure_ascii=False)


__all__ = ["CODATA_EDITION", "CONSTANTS", "PhysicalConstants", "constants_json", "constants_table"]
