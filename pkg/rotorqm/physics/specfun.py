"""
Funciones de Bessel de orden entero: valores, derivadas y ceros positivos.

Los valores salen de scipy.special; los ceros usan jn_zeros/jnp_zeros como
semilla y se pulen con brentq dentro de un intervalo con cambio de signo
verificado. Las tablas de ceros se guardan en una caché de módulo.

Uso:
    from rotorqm.physics.specfun import bessel_zero, bessel_prime_zero
    j11 = bessel_zero(1, 1)          # 3.8317...
    jp11 = bessel_prime_zero(1, 1)   # 1.8411...
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Tuple, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import optimize, special

from ..core.errors import ErrorCode, RotorQMError
from ..core.run_logging import get_logger
from ..core.settings import get_settings


logger = get_logger("specfun")

MAX_ORDER = 50
MAX_INDEX = 200

# Semillas a pedir de una vez; las tablas crecen por bloques
_TABLE_CHUNK = 20

# Ensanchamiento máximo del intervalo alrededor de una semilla
_MAX_BRACKET = 0.5

FloatOrArray = Union[float, NDArray[np.float64]]


class ZeroKind(str, Enum):
	"""Tipo de cero: de Jₙ o de Jₙ′"""
	FUNCTION_ZERO = "FUNCTION_ZERO"
	DERIVATIVE_ZERO = "DERIVATIVE_ZERO"


# ============================================================
# VALIDACIÓN
# ============================================================

def _check_order(n: int) -> int:
	if int(n) != n:
		raise RotorQMError(ErrorCode.ORDER_OUT_OF_RANGE, "el orden debe ser entero", n=n)
	if abs(n) > MAX_ORDER:
		raise RotorQMError(ErrorCode.ORDER_OUT_OF_RANGE, f"|n| <= {MAX_ORDER}", n=n)
	return int(n)


def _check_argument(x: ArrayLike) -> NDArray[np.float64]:
	values = np.asarray(x, dtype=float)
	if not np.all(np.isfinite(values)):
		raise RotorQMError(ErrorCode.NONFINITE_VALUE, "argumento no finito")
	if np.any(values < 0.0):
		raise RotorQMError(ErrorCode.NEGATIVE_ARGUMENT, "x debe ser >= 0", x_min=float(values.min()))
	return values


def _check_index(s: int) -> int:
	if int(s) != s or not 1 <= s <= MAX_INDEX:
		raise RotorQMError(ErrorCode.INDEX_OUT_OF_RANGE, f"1 <= s <= {MAX_INDEX}", s=s)
	return int(s)


def _as_output(values: NDArray[np.float64], like: ArrayLike) -> FloatOrArray:
	if np.ndim(like) == 0:
		return float(values)
	return values


# ============================================================
# VALORES
# ============================================================

def bessel_j(n: int, x: ArrayLike) -> FloatOrArray:
	"""
	Jₙ(x) para orden entero y x >= 0.

	Args:
		n: Orden entero, |n| <= 50
		x: Argumento (escalar o array) no negativo

	Returns:
		float o array: Jₙ(x); para n < 0 vale (−1)ⁿ J₋ₙ(x)
	"""
	order = _check_order(n)
	values = _check_argument(x)
	return _as_output(special.jv(order, values), x)


def bessel_j_prime(n: int, x: ArrayLike) -> FloatOrArray:
	"""Jₙ′(x) por la recurrencia (Jₙ₋₁ − Jₙ₊₁)/2."""
	order = _check_order(n)
	values = _check_argument(x)
	result = 0.5 * (special.jv(order - 1, values) - special.jv(order + 1, values))
	return _as_output(result, x)


# ============================================================
# CEROS
# ============================================================

@dataclass(frozen=True)
class BesselZeroTable:
	"""Ceros positivos ordenados de Jₙ o Jₙ′; zeros[s-1] es el cero s."""
	order: int
	kind: ZeroKind
	zeros: Tuple[float, ...]

	def __len__(self) -> int:
		return len(self.zeros)

	def root(self, s: int) -> float:
		"""Cero número s (s >= 1)."""
		_check_index(s)
		if s > len(self.zeros):
			raise RotorQMError(ErrorCode.INDEX_OUT_OF_RANGE, "s fuera de la tabla", s=s, size=len(self.zeros))
		return self.zeros[s - 1]

	def to_rows(self) -> List[Dict[str, object]]:
		"""Filas (n, kind, s, root) para exportar a CSV."""
		return [
			{"n": self.order, "kind": self.kind.value, "s": index, "root": root}
			for index, root in enumerate(self.zeros, start=1)
		]


def _target(order: int, kind: ZeroKind) -> Callable[[float], float]:
	if kind is ZeroKind.FUNCTION_ZERO:
		return lambda x: float(special.jv(order, x))
	return lambda x: 0.5 * float(special.jv(order - 1, x) - special.jv(order + 1, x))


def _seeds(order: int, kind: ZeroKind, count: int) -> NDArray[np.float64]:
	if kind is ZeroKind.FUNCTION_ZERO:
		return np.asarray(special.jn_zeros(order, count), dtype=float)
	# Se pide uno de más y se descarta x = 0 si aparece (caso n = 0)
	raw = np.asarray(special.jnp_zeros(order, count + 1), dtype=float)
	return raw[raw > 0.5][:count]


def _polish(func: Callable[[float], float], seed: float, order: int, kind: ZeroKind) -> float:
	"""Refina una semilla con brentq en un intervalo con cambio de signo."""
	settings = get_settings()
	if func(seed) == 0.0:
		return seed
	half_width = 1e-9 * max(1.0, seed)
	while half_width <= _MAX_BRACKET:
		lower, upper = max(seed - half_width, 1e-300), seed + half_width
		if func(lower) * func(upper) < 0.0:
			return float(
				optimize.brentq(func, lower, upper, xtol=settings.root_xtol, rtol=settings.root_rtol)
			)
		half_width *= 10.0
	raise RotorQMError(
		ErrorCode.ROOT_NOT_BRACKETED,
		"no hay cambio de signo cerca de la semilla",
		n=order,
		kind=kind.value,
		seed=seed,
	)


def _compute_table(order: int, kind: ZeroKind, count: int) -> BesselZeroTable:
	func = _target(order, kind)
	seeds = _seeds(order, kind, count)
	zeros = [_polish(func, float(seed), order, kind) for seed in seeds]

	for previous, current in zip(zeros, zeros[1:]):
		if not current > previous:
			raise RotorQMError(
				ErrorCode.ROOT_NOT_BRACKETED,
				"ceros no estrictamente crecientes",
				n=order,
				kind=kind.value,
			)

	logger.debug("tabla de ceros n=%d kind=%s: %d raíces", order, kind.value, len(zeros))
	return BesselZeroTable(order=order, kind=kind, zeros=tuple(zeros))


@lru_cache(maxsize=None)
def _cached_table(order: int, kind: ZeroKind, size: int) -> BesselZeroTable:
	return _compute_table(order, kind, size)


def zero_table(n: int, kind: ZeroKind, count: int) -> BesselZeroTable:
	"""
	Tabla con los primeros `count` ceros de Jₙ (o Jₙ′) para el orden |n|.

	Args:
		n: Orden entero; los órdenes negativos se reducen a |n|
		kind: FUNCTION_ZERO o DERIVATIVE_ZERO
		count: Número de ceros, 1..200

	Returns:
		BesselZeroTable: Tabla con exactamente `count` ceros
	"""
	order = abs(_check_order(n))
	_check_index(count)
	kind = ZeroKind(kind)

	# Tablas en bloques de _TABLE_CHUNK ceros
	size = min(MAX_INDEX, _TABLE_CHUNK * math.ceil(count / _TABLE_CHUNK))
	cached = _cached_table(order, kind, size)

	if len(cached) == count:
		return cached
	return BesselZeroTable(order=order, kind=kind, zeros=cached.zeros[:count])


def bessel_zero(n: int, s: int) -> float:
	"""
	Cero número s de Jₙ (j_{n,s}), con j_{−n,s} = j_{n,s}.

	Args:
		n: Orden entero, |n| <= 50
		s: Índice del cero, 1..200

	Returns:
		float: Raíz positiva j_{n,s}
	"""
	_check_order(n)
	index = _check_index(s)
	return zero_table(n, ZeroKind.FUNCTION_ZERO, index).zeros[index - 1]


def bessel_prime_zero(n: int, s: int) -> float:
	"""Cero número s de Jₙ′ (j′_{n,s}); para n = 0 no se cuenta x = 0."""
	_check_order(n)
	index = _check_index(s)
	return zero_table(n, ZeroKind.DERIVATIVE_ZERO, index).zeros[index - 1]


def clear_cache() -> None:
	"""Vacía la caché de tablas de ceros."""
	_cached_table.cache_clear()


def zero_table_rows(
	orders: Iterable[int],
	s_max: int,
	kinds: Iterable[ZeroKind] = (ZeroKind.FUNCTION_ZERO, ZeroKind.DERIVATIVE_ZERO),
) -> List[Dict[str, object]]:
	"""Filas (n, kind, s, root) para varios órdenes y tipos, en orden n, kind, s."""
	kinds = tuple(kinds)
	rows: List[Dict[str, object]] = []
	for n in orders:
		for kind in kinds:
			rows.extend(zero_table(n, kind, s_max).to_rows())
	return rows


__all__ = [
	"BesselZeroTable",
	"MAX_INDEX",
	"MAX_ORDER",
	"ZeroKind",
	"bessel_j",
	"bessel_j_prime",
	"bessel_prime_zero",
	"bessel_zero",
	"clear_cache",
	"zero_table",
	"zero_table_rows",
]
