"""
Oráculos independientes para los tests: serie de potencias de Jₙ en
aritmética decimal y fórmulas cerradas evaluadas a mano.
"""
from decimal import Decimal, localcontext
from math import factorial


def series_j(n: int, x: float, digits: int = 90) -> Decimal:
	"""Jₙ(x) por la serie ascendente con `digits` dígitos decimales."""
	if n < 0:
		value = series_j(-n, x, digits)
		return -value if n % 2 else value
	if x == 0:
		return Decimal(1) if n == 0 else Decimal(0)
	with localcontext() as ctx:
		ctx.prec = digits
		half = Decimal(x) / 2
		term = half ** n / factorial(n)
		total = term
		threshold = Decimal(10) ** (-digits + 10)
		k = 0
		while True:
			k += 1
			term = -term * half * half / (k * (k + n))
			total += term
			if k > x and abs(term) < threshold:
				return +total


def series_j_prime(n: int, x: float) -> Decimal:
	"""Jₙ′(x) = (Jₙ₋₁ − Jₙ₊₁)/2 con la serie."""
	return (series_j(n - 1, x) - series_j(n + 1, x)) / 2


def changes_sign(func, lower: float, upper: float) -> bool:
	"""True si func cambia de signo (o se anula) en [lower, upper]."""
	return func(lower) * func(upper) <= 0


def bisect_root(func, lower: float, upper: float, iterations: int = 60) -> float:
	"""Bisección simple sobre un intervalo con cambio de signo."""
	f_lower = func(lower)
	for _ in range(iterations):
		mid = 0.5 * (lower + upper)
		f_mid = func(mid)
		if f_mid == 0:
			return mid
		if (f_mid > 0) == (f_lower > 0):
			lower, f_lower = mid, f_mid
		else:
			upper = mid
	return 0.5 * (lower + upper)
