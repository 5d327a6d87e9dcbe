"""
Core de rotorqm - Constantes, tipos de parámetros, errores, configuración y consola.
"""
from .console_manager import console, get_console
from .constants import CODATA_EDITION, CONSTANTS, PhysicalConstants, constants_json, constants_table
from .errors import ErrorCode, ResultFlag, RotorQMError
from .frame import (
	ELECTRON,
	NEUTRON,
	NO_FLUX,
	PARTICLE_PRESETS,
	PROTON,
	BoundaryCondition,
	FluxSpec,
	ModeSpec,
	Particle,
	RotatingFrame,
	Sector,
	characteristic_energy,
	get_particle,
	radius_energy,
	validate_frame,
)
from .run_logging import LogType, RunLogger, get_logger
from .settings import Settings, get_settings, load_settings, reload_settings

__all__ = [
	# Consola y logging
	"console",
	"get_console",
	"LogType",
	"RunLogger",
	"get_logger",
	# Constantes
	"CODATA_EDITION",
	"CONSTANTS",
	"PhysicalConstants",
	"constants_json",
	"constants_table",
	# Errores
	"ErrorCode",
	"ResultFlag",
	"RotorQMError",
	# Tipos
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
	# Configuración
	"Settings",
	"get_settings",
	"load_settings",
	"reload_settings",
]
