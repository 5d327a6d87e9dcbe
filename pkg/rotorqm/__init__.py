"""
rotorqm - Efecto Sagnac clásico y espectros cuánticos en un sistema cilíndrico en rotación.
"""
import logging

from .core import (
	CONSTANTS,
	ELECTRON,
	NEUTRON,
	BoundaryCondition,
	ErrorCode,
	FluxSpec,
	ModeSpec,
	Particle,
	RotatingFrame,
	RotorQMError,
	Sector,
	characteristic_energy,
	validate_frame,
)

__version__ = "0.1.0-alpha"

# La librería no configura handlers; eso queda para la aplicación
logging.getLogger("rotorqm").addHandler(logging.NullHandler())

__all__ = [
	"CONSTANTS",
	"ELECTRON",
	"NEUTRON",
	"BoundaryCondition",
	"ErrorCode",
	"FluxSpec",
	"ModeSpec",
	"Particle",
	"RotatingFrame",
	"RotorQMError",
	"Sector",
	"characteristic_energy",
	"validate_frame",
	"__version__",
]
