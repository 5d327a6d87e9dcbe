"""
rotorqm - punto de entrada de la línea de comandos.

Flujo:
1. Parseo de argumentos y resolución del RunConfig (preset o replay)
2. Ejecución del subcomando
3. Escritura atómica de la salida (CSV/JSON) o volcado a stdout

Códigos de salida: 0 éxito, 1 error inesperado, 2 error de dominio
(registro JSON en stdout o en --out), 130 interrupción con Ctrl+C.
"""
from __future__ import annotations

import logging
import sys
import traceback
from typing import Optional, Sequence

from rich.logging import RichHandler

from .core.console_manager import get_console
from .core.errors import RotorQMError
from .core.run_logging import RunLogger


def _configure_logging(verbose: bool) -> None:
	"""Handler de rich sobre el logger `rotorqm` para los mensajes DEBUG de la librería."""
	root = logging.getLogger("rotorqm")
	if not any(isinstance(handler, RichHandler) for handler in root.handlers):
		root.addHandler(RichHandler(console=get_console(), show_time=False, show_path=False, markup=False))
	root.setLevel(logging.DEBUG if verbose else logging.WARNING)
	# RunLogger ya imprime sus mensajes; no deben duplicarse en el handler
	logging.getLogger("rotorqm.cli").propagate = False


def main(argv: Optional[Sequence[str]] = None) -> int:
	"""
	Función principal de rotorqm.

	Args:
		argv: Argumentos sin el nombre del programa (None = sys.argv)

	Returns:
		int: Código de salida
	"""
	from .console.cli import parse_request
	from .console.commands import execute_command
	from .console.output import error_record, render, write_output

	try:
		request = parse_request(argv)
	except SystemExit as exc:
		# argparse: --help/--version (0) o argumentos inválidos (2)
		return int(exc.code or 0)
	except RotorQMError as exc:
		RunLogger().error(exc.message)
		write_output(error_record(exc))
		return 2

	_configure_logging(request.verbose)
	logger = RunLogger(verbose=request.verbose, component="cli")

	try:
		logger.debug(f"config: {request.config.to_json()}")
		ctx = execute_command(request.config)
		ctx.render()
		write_output(render(ctx), request.out)
		if request.out is not None:
			logger.success(f"{len(ctx.rows)} filas escritas en {request.out}")
		return 0

	except RotorQMError as exc:
		logger.error(f"{exc.code}: {exc.message}")
		try:
			write_output(error_record(exc), request.out)
		except RotorQMError:
			write_output(error_record(exc))
		return 2
	except KeyboardInterrupt:
		get_console().print("\n[warning]⚠ Cálculo detenido por el usuario[/warning]")
		return 130  # Código estándar para interrupción por Ctrl+C
	except Exception as exc:
		logger.error(f"Error fatal: {exc}")
		if request.verbose:
			traceback.print_exc()
		return 1


def run() -> None:
	"""Entry point del script `rotorqm`."""
	sys.exit(main())


if __name__ == "__main__":
	run()
