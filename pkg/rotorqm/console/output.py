"""
Escritura de resultados en CSV o JSON con cabecera de procedencia.

CSV: líneas de cabecera con `#` (versión, RunConfig, constantes, settings,
metadatos y, opcionalmente, la marca de tiempo), luego la fila de columnas
y los datos. Los reales se escriben en notación científica con 10 cifras
significativas.

JSON: {"meta": {...}, "rows": [...]} con claves ordenadas.

La escritura a archivo es atómica (archivo temporal + os.replace).
"""
from __future__ import annotations

import csv
import io
import json
import os
import sys
import tempfile
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np

from .. import __version__
from ..core.constants import CODATA_EDITION, constants_table
from ..core.errors import ErrorCode, RotorQMError
from ..core.settings import get_settings
from .commands import CommandContext
from .run_config import HEADER_CONFIG_PREFIX, RunConfig


FLOAT_FORMAT = "{:.9e}"


def _jsonable(value: Any) -> Any:
	if isinstance(value, Enum):
		return value.value
	if isinstance(value, np.generic):
		return value.item()
	if isinstance(value, np.ndarray):
		return value.tolist()
	if isinstance(value, (tuple, set, frozenset)):
		return list(value)
	return repr(value)


def _dumps(data: Any, indent: Optional[int] = None) -> str:
	return json.dumps(data, sort_keys=True, ensure_ascii=False, default=_jsonable, indent=indent)


def format_value(value: Any) -> str:
	"""Celda CSV: reales en {:.9e}, enteros tal cual, None vacío."""
	if value is None:
		return ""
	if isinstance(value, Enum):
		return str(value.value)
	if isinstance(value, (bool, np.bool_)):
		return str(int(value))
	if isinstance(value, (int, np.integer)):
		return str(int(value))
	if isinstance(value, (float, np.floating)):
		return FLOAT_FORMAT.format(float(value))
	return str(value)


def build_meta(ctx: CommandContext, timestamp: Optional[str] = None) -> Dict[str, Any]:
	"""Metadatos completos de la salida (config, constantes, settings y los del subcomando)."""
	meta: Dict[str, Any] = {
		"version": __version__,
		"config": ctx.config.to_dict(),
		"constants": constants_table(),
		"codata": CODATA_EDITION,
		"settings": get_settings().to_dict(),
		"result": ctx.meta,
	}
	if timestamp is not None:
		meta["timestamp"] = timestamp
	return meta


def current_timestamp() -> str:
	return datetime.now(timezone.utc).isoformat(timespec="seconds")


def render_csv(ctx: CommandContext, timestamp: Optional[str] = None) -> str:
	"""Texto CSV con cabecera `#`."""
	meta = build_meta(ctx, timestamp)
	lines: List[str] = [
		f"# rotorqm {meta['version']}",
		HEADER_CONFIG_PREFIX + ctx.config.to_json(),
		"# constants: " + _dumps(meta["constants"]),
		"# settings: " + _dumps(meta["settings"]),
		"# meta: " + _dumps(meta["result"]),
	]
	if timestamp is not None:
		lines.append(f"# timestamp: {timestamp}")

	buffer = io.StringIO()
	writer = csv.writer(buffer, lineterminator="\n")
	writer.writerow(ctx.columns)
	for row in ctx.rows:
		writer.writerow([format_value(row.get(column)) for column in ctx.columns])
	return "\n".join(lines) + "\n" + buffer.getvalue()


def render_json(ctx: CommandContext, timestamp: Optional[str] = None) -> str:
	"""Texto JSON {meta, rows}."""
	document = {"meta": build_meta(ctx, timestamp), "rows": ctx.rows}
	return _dumps(document, indent=2) + "\n"


def render(ctx: CommandContext) -> str:
	"""Renderiza según config.format; la marca de tiempo se omite con --no-timestamp."""
	config: RunConfig = ctx.config
	timestamp = current_timestamp() if config.timestamp else None
	if config.format == "json":
		return render_json(ctx, timestamp)
	if config.format == "csv":
		return render_csv(ctx, timestamp)
	raise RotorQMError(ErrorCode.INVALID_CONFIG, f"formato desconocido: {config.format}")


def error_record(error: RotorQMError) -> str:
	"""Registro JSON de un error (una línea)."""
	return _dumps(error.to_record()) + "\n"


def write_output(text: str, out: Optional[Path] = None) -> None:
	"""
	Escribe el texto en `out` de forma atómica, o en stdout si out es None.

	Raises:
		RotorQMError: IO_ERROR si el archivo no se puede escribir
	"""
	if out is None:
		sys.stdout.write(text)
		sys.stdout.flush()
		return

	target = Path(out)
	tmp_name: Optional[str] = None
	try:
		target.parent.mkdir(parents=True, exist_ok=True)
		with tempfile.NamedTemporaryFile(
			"w",
			encoding="utf-8",
			newline="",
			dir=target.parent,
			prefix=f".{target.name}.",
			suffix=".tmp",
			delete=False,
		) as handle:
			tmp_name = handle.name
			handle.write(text)
		os.replace(tmp_name, target)
	except OSError as exc:
		if tmp_name is not None and os.path.exists(tmp_name):
			os.unlink(tmp_name)
		raise RotorQMError(ErrorCode.IO_ERROR, f"no se pudo escribir {target}", reason=str(exc)) from exc


__all__ = [
	"FLOAT_FORMAT",
	"build_meta",
	"current_timestamp",
	"error_record",
	"format_value",
	"render",
	"render_csv",
	"render_json",
	"write_output",
]
