"""
Consola de rotorqm - Parser, subcomandos, configuración de ejecución y escritura de resultados.
"""
from .cli import CliRequest, build_parser, parse_request
from .commands import COMMANDS, CommandContext, canonical_name, execute_command
from .output import error_record, format_value, render, render_csv, render_json, write_output
from .run_config import RunConfig, load_presets, read_config_from_output, resolve_config

__all__ = [
	# Parser
	"CliRequest",
	"build_parser",
	"parse_request",
	# Subcomandos
	"COMMANDS",
	"CommandContext",
	"canonical_name",
	"execute_command",
	# Salida
	"error_record",
	"format_value",
	"render",
	"render_csv",
	"render_json",
	"write_output",
	# Configuración
	"RunConfig",
	"load_presets",
	"read_config_from_output",
	"resolve_config",
]
