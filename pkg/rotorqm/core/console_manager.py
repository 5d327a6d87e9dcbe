"""
Consola global de rotorqm.

Todos los mensajes para el usuario (RunLogger, handlers de la CLI, logs
DEBUG vía RichHandler) pasan por una única Console sobre stderr. stdout
queda libre para el CSV/JSON cuando no se usa `--out`.

Uso:
    from rotorqm.core import get_console
    get_console().print("[warning]⚠[/warning] sin batido")
"""

import sys

from rich.console import Console
from rich.theme import Theme


ROTORQM_THEME = Theme({
	"info": "white",
	"success": "bold green",
	"warning": "bold yellow",
	"error": "bold red",
	"header": "bold cyan",
	"debug": "dim white",
	"muted": "dim",
})


def _build_console() -> Console:
	# Colores solo en una terminal real; en pipes, CI y pytest texto plano
	return Console(
		stderr=True,
		theme=ROTORQM_THEME,
		force_terminal=sys.stderr.isatty() or None,
		force_interactive=False,
		highlight=False,
		soft_wrap=True,
		width=120,
	)


_global_console = _build_console()


def get_console() -> Console:
	"""Consola compartida (stderr, tema de rotorqm)."""
	return _global_console


console = _global_console


__all__ = ["ROTORQM_THEME", "console", "get_console"]
