"""
Subcomandos de la CLI.

Cada handler recibe un CommandContext con el RunConfig resuelto, calcula
sus filas con la capa física y deja los mensajes para el usuario en el
contexto (se muestran con render()).

Uso:
    from rotorqm.console.commands import execute_command
    ctx = execute_command(config)
    ctx.rows, ctx.columns, ctx.meta
"""
from __future__ import annotations

import math
from typing import Any, Callable, Dict, List, Sequence, Tuple

import numpy as np

from ..core.console_manager import get_console
from ..core.errors import ErrorCode, RotorQMError
from ..core.frame import NO_FLUX, BoundaryCondition, FluxSpec, RotatingFrame, Sector, characteristic_energy
from ..physics.classical import (
	ClassicalSignal,
	ClosedPath,
	circulation_phase,
	classical_sagnac_phase,
	path_delta_t,
	path_trace,
	roundtrip_delta_t,
)
from ..physics.cylinder3d import (
	anomalous_interference,
	beat_cycle_average,
	beat_period,
	cylinder_energy,
	cylinder_mode,
	negative_energy_census_3d,
	normalization_constant,
)
from ..physics.shell import (
	SpectrumFamily,
	SpectrumPoint,
	equivalent_flux_radius,
	flux_spectrum,
	negative_energy_census_shell,
	rotation_coefficient,
	sector_interference,
	shell_coefficients,
	spectrum_family,
)
from ..physics.specfun import MAX_ORDER, ZeroKind, zero_table_rows
from .run_config import RunConfig


SPECTRUM_COLUMNS = ["family", "sector", "p_or_m", "k", "flux_ratio", "omega", "energy_J", "E0_J", "correction_J", "negative_flag"]
CYLINDER_COLUMNS = ["bc", "n", "s_paper", "s_lib", "omega", "energy_J"]
BEAT_COLUMNS = ["r", "t", "cross_term"]

# Tiempo de muestreo del batido cuando no hay rotación ni --t-max (s)
_DEFAULT_BEAT_WINDOW = 1e-6


class CommandContext:
	"""Contexto de ejecución de un subcomando: filas, columnas, metadatos y mensajes."""

	def __init__(self, config: RunConfig):
		self.config = config
		self.rows: List[Dict[str, Any]] = []
		self.columns: List[str] = []
		self.meta: Dict[str, Any] = {}
		self.output: List[Tuple[str, str]] = []

	def print(self, message: str) -> None:
		"""Agregar mensaje al output."""
		self.output.append(("info", message))

	def warning(self, message: str) -> None:
		"""Agregar advertencia al output (amarillo)."""
		self.output.append(("warning", message))

	def success(self, message: str) -> None:
		"""Agregar éxito al output (verde)."""
		self.output.append(("success", message))

	def set_table(self, columns: Sequence[str], rows: List[Dict[str, Any]]) -> None:
		self.columns = list(columns)
		self.rows = [{column: row.get(column) for column in self.columns} for row in rows]

	def render(self) -> None:
		"""Renderiza los mensajes con colores usando la consola global (stderr)."""
		console_instance = get_console()
		for msg_type, message in self.output:
			if msg_type == "warning":
				console_instance.print(f"[warning]⚠[/warning] {message}")
			elif msg_type == "success":
				console_instance.print(f"[success]✓[/success] {message}")
			else:
				console_instance.print(message, style="info", markup=False)


# ============================================================
# AUXILIARES
# ============================================================

def _boundary_conditions(value: str) -> List[BoundaryCondition]:
	if value == "both":
		return [BoundaryCondition.DIRICHLET, BoundaryCondition.NEUMANN]
	return [_single_bc(value)]


def _single_bc(value: str) -> BoundaryCondition:
	try:
		bc = BoundaryCondition(value.upper())
	except ValueError as exc:
		raise RotorQMError(ErrorCode.INVALID_CONFIG, f"condición de contorno desconocida: {value}") from exc
	if bc is BoundaryCondition.NONE:
		raise RotorQMError(ErrorCode.INVALID_CONFIG, "el cilindro necesita dirichlet o neumann", bc=value)
	return bc


def _p_range(config: RunConfig) -> range:
	if config.p_max < config.p_min:
		raise RotorQMError(ErrorCode.INVALID_CONFIG, "--p-max < --p-min", p_min=config.p_min, p_max=config.p_max)
	return range(config.p_min, config.p_max + 1)


def _amplitude(raw: str, name: str) -> complex:
	try:
		return complex(raw.replace(" ", ""))
	except ValueError as exc:
		raise RotorQMError(ErrorCode.INVALID_CONFIG, f"{name} no es un número complejo", value=raw) from exc


def _cylinder_row(point: SpectrumPoint) -> Dict[str, Any]:
	s_lib = point.mode.radial_index
	return {
		"bc": point.mode.bc.value.lower(),
		"n": point.mode.angular_qn,
		"s_paper": s_lib - 1,
		"s_lib": s_lib,
		"omega": point.omega,
		"energy_J": point.energy,
	}


def _mode_index(config: RunConfig) -> int:
	"""Índice s de la librería (con --paper-indexing el usuario pasa s − 1)."""
	return config.s + 1 if config.paper_index_labels else config.s


# ============================================================
# HANDLERS
# ============================================================

def cmd_classical_sagnac(ctx: CommandContext) -> None:
	"""Tiempos de ida y vuelta en un círculo (exacto) o en un camino en flor."""
	config = ctx.config
	frame = config.build_frame()
	particle = config.build_particle()

	if config.path_amplitude == 0.0:
		path = ClosedPath.circle(frame.radius)
		timing = roundtrip_delta_t(frame)
	else:
		path = ClosedPath.flower(frame.radius, config.path_amplitude, config.path_lobes)
		timing = path_delta_t(frame, path)

	ctx.meta["path"] = path.label
	ctx.meta["signal_speed"] = timing.signal_speed

	if config.trace:
		ctx.set_table(["phi", "r", "dT_contribution"], path_trace(frame, path, config.points))
		ctx.print(f"Traza de {config.points} puntos sobre {path.label}")
		return

	phase = None
	if config.frequency is not None:
		phase = classical_sagnac_phase(ClassicalSignal(config.frequency), timing.direct_delta_t)

	row = {
		"omega": frame.omega,
		"radius": frame.radius,
		"t_cw": timing.t_cw,
		"t_ccw": timing.t_ccw,
		"delta_t": timing.delta_t,
		"direct_delta_t": timing.direct_delta_t,
		"leading_order": timing.leading_order,
		"higher_order_residual": timing.higher_order_residual,
		"enclosed_area": timing.enclosed_area,
		"gamma_min": min(timing.gamma_profile),
		"phase_rad": phase,
		"circulation_phase_rad": circulation_phase(frame, particle),
	}
	ctx.set_table(list(row), [row])
	ctx.print(f"Δt = {timing.direct_delta_t:.6e} s ({path.label})")


_SHELL_FAMILIES = {
	"class2": (SpectrumFamily.CLASS_II,),
	"cap": (SpectrumFamily.PERIODIC_PSI_CAP,),
	"lower": (SpectrumFamily.PERIODIC_PSI_LOWER,),
	"all": (SpectrumFamily.CLASS_II, SpectrumFamily.PERIODIC_PSI_CAP, SpectrumFamily.PERIODIC_PSI_LOWER),
}


def cmd_shell_spectrum(ctx: CommandContext) -> None:
	"""Familias de espectro de la capa sin flujo."""
	config = ctx.config
	frame = config.build_frame()
	particle = config.build_particle()
	families = _SHELL_FAMILIES.get(config.family)
	if families is None:
		raise RotorQMError(ErrorCode.INVALID_CONFIG, f"familia desconocida: {config.family}")
	sector = Sector(config.sector.upper())

	points: List[SpectrumPoint] = []
	for family in families:
		points.extend(
			spectrum_family(
				family,
				frame,
				particle,
				_p_range(config),
				k=config.k,
				sector=sector,
				include_geometric_potential=config.include_geometric_potential,
			)
		)

	coeffs = shell_coefficients(frame, particle, k_plus=config.k)
	ctx.meta["coefficients"] = coeffs.to_dict()
	ctx.meta["characteristic_energy_J"] = characteristic_energy(particle, frame)
	ctx.set_table(SPECTRUM_COLUMNS, [point.to_row() for point in points])
	ctx.print(f"{len(points)} niveles de la capa (A = {coeffs.a_coeff:.6g})")


def _flux_series(config: RunConfig, frame: RotatingFrame) -> List[Tuple[str, RotatingFrame, FluxSpec]]:
	flux = config.build_flux()
	static = RotatingFrame(omega=0.0, radius=frame.radius)
	series = {
		"both": [("rotation+flux", frame, flux)],
		"rotation": [("rotation", frame, NO_FLUX)],
		"flux": [("flux", static, flux)],
		"all": [("rotation+flux", frame, flux), ("rotation", frame, NO_FLUX), ("flux", static, flux)],
	}
	if config.series not in series:
		raise RotorQMError(ErrorCode.INVALID_CONFIG, f"serie desconocida: {config.series}")
	return series[config.series]


def cmd_flux_spectrum(ctx: CommandContext) -> None:
	"""Espectro de la capa con flujo axial, por series (rotación + flujo, solo rotación, solo flujo)."""
	config = ctx.config
	frame = config.build_frame()
	particle = config.build_particle()
	sector = Sector(config.sector.upper())

	rows: List[Dict[str, Any]] = []
	negatives: Dict[str, int] = {}
	for name, series_frame, flux in _flux_series(config, frame):
		points = [
			flux_spectrum(series_frame, particle, flux, p, config.k, sector, config.include_geometric_potential)
			for p in _p_range(config)
		]
		negatives[name] = sum(point.negative for point in points)
		rows.extend(point.to_row() for point in points)

	ctx.meta["negative_count"] = negatives
	ctx.meta["equivalent_flux_radius"] = equivalent_flux_radius(frame.radius)
	ctx.set_table(SPECTRUM_COLUMNS, rows)
	for name, count in negatives.items():
		ctx.print(f"{name}: {count} niveles con E < 0")


def cmd_cylinder_spectrum(ctx: CommandContext) -> None:
	"""E_{n,s} del cilindro para s = 1..--s con una o ambas condiciones de contorno."""
	config = ctx.config
	frame = config.build_frame()
	particle = config.build_particle()
	if config.s < 1:
		raise RotorQMError(ErrorCode.INDEX_OUT_OF_RANGE, "--s debe ser >= 1", s=config.s)

	rows = [
		_cylinder_row(cylinder_energy(frame, particle, config.n, s, bc, config.k))
		for bc in _boundary_conditions(config.bc)
		for s in range(1, config.s + 1)
	]
	ctx.set_table(CYLINDER_COLUMNS, rows)
	ctx.print(f"{len(rows)} modos del cilindro (n = {config.n})")


def cmd_interference(ctx: CommandContext) -> None:
	"""Interferencia de dos estados de clase II de la capa sobre φ ∈ [0, 2π]."""
	config = ctx.config
	frame = config.build_frame()
	particle = config.build_particle()
	if config.points < 2:
		raise RotorQMError(ErrorCode.INVALID_CONFIG, "--points >= 2", points=config.points)

	sectors = (Sector.PLUS, Sector.PLUS) if config.same_sector else (Sector.PLUS, Sector.MINUS)
	a_coeff = rotation_coefficient(frame, particle)
	trace = sector_interference(
		_amplitude(config.c_plus, "--c-plus"),
		_amplitude(config.c_minus, "--c-minus"),
		a_coeff,
		np.linspace(0.0, 2.0 * math.pi, config.points),
		sectors,
	)

	ctx.meta.update(
		{
			"a_coeff": a_coeff,
			"extracted_phase": trace.extracted_phase,
			"winding": trace.winding,
			"roundtrip_cross_term": trace.roundtrip_cross_term,
			"sectors": [sector.value for sector in trace.sectors_used],
			"flags": list(trace.flags),
			"circulation_phase": circulation_phase(frame, particle),
		}
	)
	ctx.set_table(["phi", "density", "cross_term"], trace.to_rows())
	if trace.flags:
		ctx.warning(f"Mismo sector: {', '.join(trace.flags)}")
	else:
		ctx.print(f"Fase extraída {trace.extracted_phase:.9f} rad tras {trace.winding} vueltas")


def cmd_beat(ctx: CommandContext) -> None:
	"""Término cruzado del par (+n, sector +)/(−n, sector −) del cilindro sobre (r, t)."""
	config = ctx.config
	frame = config.build_frame()
	particle = config.build_particle()
	if config.bc == "both":
		raise RotorQMError(ErrorCode.INVALID_CONFIG, "el batido necesita una sola --bc (y opcionalmente --bc-minus)")
	if config.points < 2 or config.r_points < 1:
		raise RotorQMError(ErrorCode.INVALID_CONFIG, "--points >= 2 y --r-points >= 1")

	bc = _single_bc(config.bc)
	bc_minus = _single_bc(config.bc_minus) if config.bc_minus else bc
	s = _mode_index(config)
	period = beat_period(frame, config.n)
	if config.t_max is not None:
		window = config.t_max
	elif period is not None:
		window = 2.0 * period
	else:
		window = _DEFAULT_BEAT_WINDOW

	radii = np.linspace(0.0, frame.radius, config.r_points) if config.r_points > 1 else np.array([0.5 * frame.radius])
	times = np.linspace(0.0, window, config.points)
	trace = anomalous_interference(frame, particle, config.n, s, bc, radii, times, bc_minus=bc_minus, k=config.k)

	scale = 1.0
	if config.normalize_modes:
		plus = cylinder_mode(frame, particle, config.n, s, bc, config.k, Sector.PLUS)
		minus = cylinder_mode(frame, particle, -config.n, s, bc_minus, config.k, Sector.MINUS)
		scale = normalization_constant(plus) * normalization_constant(minus)

	rows = [{**row, "cross_term": row["cross_term"] * scale} for row in trace.to_rows()]
	ctx.meta.update(trace.meta)
	ctx.meta["flags"] = list(trace.flags)
	ctx.meta["normalized"] = config.normalize_modes
	if period is not None and bc_minus is bc:
		ctx.meta["cycle_average_mid_radius"] = beat_cycle_average(frame, particle, config.n, s, bc, 0.5 * frame.radius) * scale
	ctx.set_table(BEAT_COLUMNS, rows)
	if period is None:
		ctx.warning("Sin batido: n = 0 o Ω = 0")
	else:
		ctx.print(f"Periodo de batido {period:.6e} s")


def cmd_census(ctx: CommandContext) -> None:
	"""Estados de energía negativa en la capa con flujo o en el cilindro."""
	config = ctx.config
	frame = config.build_frame()
	particle = config.build_particle()

	if config.geometry == "shell":
		census = negative_energy_census_shell(
			frame,
			particle,
			config.build_flux(),
			_p_range(config),
			config.k,
			config.include_geometric_potential,
		)
		ctx.meta["count"] = census.count
		ctx.meta["scanned"] = census.scanned
		ctx.set_table(SPECTRUM_COLUMNS, [point.to_row() for point in census.negative])
		ctx.print(f"{census.count} de {census.scanned} niveles con E < 0")
		return

	if config.geometry != "cylinder":
		raise RotorQMError(ErrorCode.INVALID_CONFIG, f"geometría desconocida: {config.geometry}")

	rows: List[Dict[str, Any]] = []
	counts: Dict[str, int] = {}
	for bc in _boundary_conditions(config.bc):
		census = negative_energy_census_3d(frame, particle, bc, config.n_max, config.s_max, config.k)
		counts[bc.value.lower()] = census.count
		rows.extend(_cylinder_row(point) for point in census.negative)
	ctx.meta["count"] = counts
	ctx.set_table(CYLINDER_COLUMNS, rows)
	for name, count in counts.items():
		ctx.print(f"{name}: {count} modos con E < 0")


def cmd_bessel_table(ctx: CommandContext) -> None:
	"""Tabla de ceros j_{n,s} y j′_{n,s} para n = 0..--n-max y s = 1..--s-max."""
	config = ctx.config
	if not 0 <= config.n_max <= MAX_ORDER:
		raise RotorQMError(ErrorCode.ORDER_OUT_OF_RANGE, f"0 <= --n-max <= {MAX_ORDER}", n_max=config.n_max)
	rows = zero_table_rows(range(config.n_max + 1), config.s_max, (ZeroKind.FUNCTION_ZERO, ZeroKind.DERIVATIVE_ZERO))
	if config.paper_index_labels:
		rows = [{**row, "s": int(row["s"]) - 1} for row in rows]
	ctx.set_table(["n", "kind", "s", "root"], rows)
	ctx.print(f"{len(rows)} ceros tabulados")


# ============================================================
# REGISTRO
# ============================================================

# Comandos principales (nombre -> función)
_COMMAND_FUNCTIONS: Dict[str, Callable[[CommandContext], None]] = {
	"classical-sagnac": cmd_classical_sagnac,
	"shell-spectrum": cmd_shell_spectrum,
	"flux-spectrum": cmd_flux_spectrum,
	"cylinder-spectrum": cmd_cylinder_spectrum,
	"interference": cmd_interference,
	"beat": cmd_beat,
	"census": cmd_census,
	"bessel-table": cmd_bessel_table,
}

# Alias de comandos (alias -> nombre del comando)
_COMMAND_ALIASES: Dict[str, str] = {
	"sagnac": "classical-sagnac",
	"shell": "shell-spectrum",
	"flux": "flux-spectrum",
	"cylinder": "cylinder-spectrum",
	"zeros": "bessel-table",
}

# Construir el dict COMMANDS con comandos y alias
COMMANDS: Dict[str, Callable[[CommandContext], None]] = dict(_COMMAND_FUNCTIONS)
for alias, cmd_name in _COMMAND_ALIASES.items():
	if cmd_name in _COMMAND_FUNCTIONS:
		COMMANDS[alias] = _COMMAND_FUNCTIONS[cmd_name]


def canonical_name(name: str) -> str:
	"""Nombre canónico de un subcomando o alias."""
	return _COMMAND_ALIASES.get(name, name)


def execute_command(config: RunConfig) -> CommandContext:
	"""
	Ejecuta el subcomando del RunConfig.

	Args:
		config: Configuración resuelta

	Returns:
		CommandContext: Filas, columnas, metadatos y mensajes

	Raises:
		RotorQMError: INVALID_CONFIG si el subcomando no existe; cualquier error de la capa física
	"""
	handler = COMMANDS.get(config.subcommand)
	if handler is None:
		raise RotorQMError(ErrorCode.INVALID_CONFIG, f"subcomando desconocido: {config.subcommand}")
	ctx = CommandContext(config)
	handler(ctx)
	return ctx


__all__ = [
	"BEAT_COLUMNS",
	"COMMANDS",
	"CYLINDER_COLUMNS",
	"CommandContext",
	"SPECTRUM_COLUMNS",
	"canonical_name",
	"execute_command",
]
