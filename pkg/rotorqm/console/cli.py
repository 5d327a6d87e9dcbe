"""
Parser de la línea de comandos de rotorqm.

Todos los flags usan default=SUPPRESS: el Namespace solo contiene lo que
el usuario pasó, y así un preset puede rellenar el resto sin pisar nada
explícito.

Uso:
    rotorqm flux-spectrum --preset fig1 --out fig1.csv
    rotorqm cylinder-spectrum --preset fig2 --format json
    rotorqm classical-sagnac --omega 0 --radius 1
    rotorqm replay fig1.csv
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from .. import __version__
from .commands import canonical_name
from .run_config import RunConfig, read_config_from_output, resolve_config


# Claves del Namespace que no forman parte del RunConfig
_CONTROL_KEYS = frozenset({"command", "out", "verbose", "preset", "file"})

_BC_CHOICES = ["dirichlet", "neumann", "both"]


@dataclass(frozen=True)
class CliRequest:
	"""Resultado del parseo: configuración, destino y verbosidad."""
	config: RunConfig
	out: Optional[Path]
	verbose: bool
	replay: bool = False


def _common_parser() -> argparse.ArgumentParser:
	"""Flags compartidos por todos los subcomandos de cálculo."""
	parser = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)

	system = parser.add_argument_group("sistema")
	rotation = system.add_mutually_exclusive_group()
	rotation.add_argument("--omega", type=float, help="Velocidad angular Ω (rad/s)")
	rotation.add_argument("--linear-velocity", type=float, help="Velocidad del borde v = ΩR₀ (m/s)")
	system.add_argument("--radius", type=float, help="Radio R₀ (m)")
	system.add_argument("--particle", choices=["electron", "neutron", "proton"], help="Partícula predefinida")
	system.add_argument("--mass", type=float, help="Masa en reposo (kg); pisa la de --particle")
	system.add_argument("--k", type=float, help="Número de onda axial (1/m)")
	system.add_argument("--preset", choices=["fig1", "fig2", "eq86"], help="Parámetros predefinidos")

	physics = parser.add_argument_group("flags físicos")
	physics.add_argument(
		"--with-geometric-potential",
		dest="include_geometric_potential",
		action="store_true",
		help="Suma el potencial geométrico −ℏ²/(2m₀R₀²)",
	)
	physics.add_argument(
		"--paper-indexing",
		dest="paper_index_labels",
		action="store_true",
		help="Índices de ceros desde 0 (s − 1) en la entrada de beat y en bessel-table",
	)
	physics.add_argument("--normalize-modes", dest="normalize_modes", action="store_true", help="Modos normalizados en beat")

	output = parser.add_argument_group("salida")
	output.add_argument("--format", choices=["csv", "json"], help="Formato de salida (csv por defecto)")
	output.add_argument("--out", type=Path, help="Archivo de salida (stdout si se omite)")
	output.add_argument("--no-timestamp", dest="timestamp", action="store_false", help="Omite la marca de tiempo")
	output.add_argument("--verbose", "-v", action="store_true", help="Mensajes de depuración y traceback")
	return parser


def _add_p_range(parser: argparse.ArgumentParser) -> None:
	parser.add_argument("--p-min", type=int, help="Primer número cuántico del barrido")
	parser.add_argument("--p-max", type=int, help="Último número cuántico del barrido (incluido)")


def _add_sector(parser: argparse.ArgumentParser) -> None:
	parser.add_argument("--sector", choices=["plus", "minus"], help="Sector de los estados")


def build_parser() -> argparse.ArgumentParser:
	"""Parser con un subparser por subcomando."""
	common = _common_parser()
	parser = argparse.ArgumentParser(
		prog="rotorqm",
		description="Efecto Sagnac clásico y espectros cuánticos en un cilindro en rotación",
	)
	parser.add_argument("--version", action="version", version=f"rotorqm {__version__}")
	subparsers = parser.add_subparsers(dest="command", metavar="COMANDO", required=True)

	def add(name: str, help_text: str, aliases: Sequence[str] = ()) -> argparse.ArgumentParser:
		return subparsers.add_parser(
			name,
			aliases=list(aliases),
			parents=[common],
			help=help_text,
			argument_default=argparse.SUPPRESS,
		)

	sagnac = add("classical-sagnac", "Tiempos de ida y vuelta de señales", ["sagnac"])
	sagnac.add_argument("--frequency", type=float, help="Frecuencia de la señal (Hz) para la fase")
	sagnac.add_argument("--path-amplitude", type=float, help="Amplitud a del camino r = R₀(1 + a·sin(kφ)); 0 = círculo")
	sagnac.add_argument("--path-lobes", type=int, help="Número de lóbulos k del camino")
	sagnac.add_argument("--trace", action="store_true", help="Emite la traza (phi, r, dT_contribution)")
	sagnac.add_argument("--points", type=int, help="Puntos de la traza")

	shell = add("shell-spectrum", "Espectros de la capa sin flujo", ["shell"])
	shell.add_argument("--family", choices=["class2", "cap", "lower", "all"], help="Familia de espectro")
	_add_p_range(shell)
	_add_sector(shell)

	flux = add("flux-spectrum", "Espectro de la capa con flujo axial", ["flux"])
	flux.add_argument("--flux-ratio", type=float, help="Flujo Φ/Φ_L")
	flux.add_argument("--series", choices=["both", "rotation", "flux", "all"], help="Series a emitir")
	_add_p_range(flux)
	_add_sector(flux)

	cylinder = add("cylinder-spectrum", "Espectro del cilindro (s = 1..--s)", ["cylinder"])
	cylinder.add_argument("--n", type=int, help="Número cuántico angular")
	cylinder.add_argument("--s", type=int, help="Número de ceros por condición de contorno")
	cylinder.add_argument("--bc", choices=_BC_CHOICES, help="Condición de contorno")

	interference = add("interference", "Interferencia entre sectores en la capa")
	interference.add_argument("--c-plus", help="Amplitud compleja del primer estado (ej. 1+0.5j)")
	interference.add_argument("--c-minus", help="Amplitud compleja del segundo estado")
	interference.add_argument("--same-sector", action="store_true", help="Ambos estados en el sector +")
	interference.add_argument("--points", type=int, help="Puntos en φ ∈ [0, 2π]")

	beat = add("beat", "Batido anómalo del par ±n en el cilindro")
	beat.add_argument("--n", type=int, help="Número cuántico angular del modo +")
	beat.add_argument("--s", type=int, help="Índice del cero")
	beat.add_argument("--bc", choices=["dirichlet", "neumann"], help="Condición de contorno del modo +")
	beat.add_argument("--bc-minus", choices=["dirichlet", "neumann"], help="Condición del modo − (por defecto --bc)")
	beat.add_argument("--points", type=int, help="Puntos en t")
	beat.add_argument("--r-points", type=int, help="Puntos en r ∈ [0, R₀]")
	beat.add_argument("--t-max", type=float, help="Ventana temporal (s); por defecto dos periodos")

	census = add("census", "Censo de energías negativas")
	census.add_argument("--geometry", choices=["shell", "cylinder"], help="Capa con flujo o cilindro")
	census.add_argument("--flux-ratio", type=float, help="Flujo Φ/Φ_L (capa)")
	_add_p_range(census)
	census.add_argument("--bc", choices=_BC_CHOICES, help="Condición de contorno (cilindro)")
	census.add_argument("--n-max", type=int, help="|n| máximo (cilindro)")
	census.add_argument("--s-max", type=int, help="s máximo (cilindro)")

	table = add("bessel-table", "Tabla de ceros de Jₙ y Jₙ′", ["zeros"])
	table.add_argument("--n-max", type=int, help="Orden máximo")
	table.add_argument("--s-max", type=int, help="Ceros por orden y tipo")

	replay = subparsers.add_parser("replay", help="Reejecuta la configuración de un archivo de salida")
	replay.add_argument("file", type=Path, help="Archivo CSV o JSON generado por rotorqm")
	replay.add_argument("--out", type=Path, default=None, help="Archivo de salida (stdout si se omite)")
	replay.add_argument("--verbose", "-v", action="store_true", help="Mensajes de depuración y traceback")

	return parser


def parse_request(argv: Optional[Sequence[str]] = None) -> CliRequest:
	"""
	Parsea argv y resuelve el RunConfig (preset incluido) o lo lee del archivo a reejecutar.

	Args:
		argv: Argumentos sin el nombre del programa (None = sys.argv)

	Returns:
		CliRequest: Configuración, destino y verbosidad
	"""
	args = build_parser().parse_args(argv)
	values: Dict[str, Any] = vars(args)
	verbose = bool(values.get("verbose", False))
	out = values.get("out")

	if args.command == "replay":
		return CliRequest(config=read_config_from_output(args.file), out=out, verbose=verbose, replay=True)

	explicit = {key: value for key, value in values.items() if key not in _CONTROL_KEYS}
	config = resolve_config(canonical_name(args.command), explicit, values.get("preset"))
	return CliRequest(config=config, out=out, verbose=verbose)


__all__ = ["CliRequest", "build_parser", "parse_request"]
