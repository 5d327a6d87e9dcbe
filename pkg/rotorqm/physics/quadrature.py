"""
Cuadratura compuesta de Gauss–Legendre con duplicación de paneles.

El número de paneles se duplica hasta que el cambio relativo entre dos
pasadas baja de `quad_rtol` (o se alcanza `quad_max_panels`).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from ..core.run_logging import get_logger
from ..core.settings import Settings, get_settings


logger = get_logger("quadrature")

Integrand = Callable[[NDArray[np.float64]], NDArray[np.float64]]


@dataclass(frozen=True)
class QuadratureResult:
	value: float
	panels: int
	converged: bool


@lru_cache(maxsize=8)
def _nodes(count: int) -> Tuple[NDArray[np.float64], NDArray[np.float64]]:
	return np.polynomial.legendre.leggauss(count)


def _composite(func: Integrand, a: float, b: float, panels: int, count: int) -> float:
	nodes, weights = _nodes(count)
	edges = np.linspace(a, b, panels + 1)
	half = 0.5 * np.diff(edges)
	mid = 0.5 * (edges[:-1] + edges[1:])
	points = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
	values = np.asarray(func(points), dtype=float).reshape(panels, count)
	return float(np.sum(half * (values @ weights)))


def integrate(
	func: Integrand,
	a: float,
	b: float,
	atol: float = 0.0,
	settings: Optional[Settings] = None,
) -> QuadratureResult:
	"""
	Integra `func` (vectorizada sobre numpy) en [a, b].

	Args:
		func: Integrando que acepta y devuelve arrays
		a: Límite inferior
		b: Límite superior
		atol: Tolerancia absoluta extra (integrales que se anulan)
		settings: Tolerancias; por defecto las globales

	Returns:
		QuadratureResult: Valor, paneles usados y si convergió
	"""
	settings = settings or get_settings()
	count = settings.quad_nodes
	panels = 1
	previous = _composite(func, a, b, panels, count)
	while panels < settings.quad_max_panels:
		panels *= 2
		current = _composite(func, a, b, panels, count)
		if abs(current - previous) <= max(settings.quad_rtol * abs(current), atol):
			return QuadratureResult(value=current, panels=panels, converged=True)
		previous = current

	logger.debug("cuadratura sin converger tras %d paneles", panels)
	return QuadratureResult(value=previous, panels=panels, converged=False)


__all__ = ["QuadratureResult", "integrate"]
