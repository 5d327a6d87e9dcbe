"""
Logging de ejecución para rotorqm.

Combina la consola de colores (mensajes para el usuario) con el módulo
estándar `logging` (para quien use rotorqm como librería y quiera sus
propios handlers).

Uso:
    from rotorqm.core import RunLogger
    logger = RunLogger(verbose=True, component="cli")
    logger.info("Calculando espectro...")
    logger.success("Archivo escrito")
"""
import logging
from typing import Optional

from rich.console import Console

from .console_manager import get_console


class LogType:
	"""Tipos de mensajes disponibles"""
	DEBUG = "debug"
	INFO = "info"
	SUCCESS = "success"
	WARNING = "warning"
	ERROR = "error"


# Prefijo y nivel estándar para cada tipo
_PREFIXES = {
	LogType.DEBUG: "[DEBUG] ",
	LogType.INFO: "",
	LogType.SUCCESS: "✓ ",
	LogType.WARNING: "⚠ ",
	LogType.ERROR: "✗ ",
}

_LEVELS = {
	LogType.DEBUG: logging.DEBUG,
	LogType.INFO: logging.INFO,
	LogType.SUCCESS: logging.INFO,
	LogType.WARNING: logging.WARNING,
	LogType.ERROR: logging.ERROR,
}


def get_logger(component: str) -> logging.Logger:
	"""Logger estándar del componente (`rotorqm.<component>`)."""
	return logging.getLogger(f"rotorqm.{component}")


class RunLogger:
	"""Logger que escribe en la consola centralizada y en `logging`."""

	def __init__(self, verbose: bool = False, component: str = "cli", console: Optional[Console] = None):
		self.verbose = verbose
		self.console = console or get_console()
		self.logger = get_logger(component)
		self.logger.setLevel(logging.DEBUG if verbose else logging.INFO)

	def _emit(self, log_type: str, msg: str) -> None:
		self.logger.log(_LEVELS[log_type], msg)
		if log_type == LogType.DEBUG and not self.verbose:
			return
		# markup=False en el cuerpo: los mensajes pueden contener corchetes
		self.console.print(f"[{log_type}]{_PREFIXES[log_type]}[/{log_type}]", end="")
		self.console.print(msg, style=log_type, markup=False)

	def debug(self, msg: str) -> None:
		"""Mensaje de depuración (solo con --verbose)."""
		self._emit(LogType.DEBUG, msg)

	def info(self, msg: str) -> None:
		"""Mensaje de información."""
		self._emit(LogType.INFO, msg)

	def success(self, msg: str) -> None:
		"""Mensaje de éxito."""
		self._emit(LogType.SUCCESS, msg)

	def warning(self, msg: str) -> None:
		"""Mensaje de advertencia."""
		self._emit(LogType.WARNING, msg)

	def error(self, msg: str) -> None:
		"""Mensaje de error."""
		self._emit(LogType.ERROR, msg)


__all__ = ["LogType", "RunLogger", "get_logger"]
