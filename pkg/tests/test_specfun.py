"""
Tests del motor de Bessel: valores, derivadas, ceros y tablas.
"""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from rotorqm.core import ErrorCode, RotorQMError
from rotorqm.physics import specfun
from rotorqm.physics.specfun import (
	ZeroKind,
	bessel_j,
	bessel_j_prime,
	bessel_prime_zero,
	bessel_zero,
	zero_table,
	zero_table_rows,
)

from .oracles import bisect_root, changes_sign, series_j, series_j_prime


N_MAX = 10
S_MAX = 20
REL = 1e-10


class TestValues:
	@pytest.mark.parametrize("n", [0, 1, 2, 5, 10])
	@pytest.mark.parametrize("x", [0.0, 0.5, 3.0, 12.5, 40.0])
	def test_against_series(self, n, x):
		assert bessel_j(n, x) == pytest.approx(float(series_j(n, x)), abs=1e-14)
		assert bessel_j_prime(n, x) == pytest.approx(float(series_j_prime(n, x)), abs=1e-14)

	def test_scalar_and_array(self):
		assert isinstance(bessel_j(1, 2.0), float)
		values = bessel_j(1, np.array([0.0, 1.0, 2.0]))
		assert values.shape == (3,)

	def test_negative_order_reflection(self):
		x = np.linspace(0.0, 20.0, 41)
		assert_allclose(bessel_j(-3, x), -bessel_j(3, x), atol=1e-15)
		assert_allclose(bessel_j(-4, x), bessel_j(4, x), atol=1e-15)

	def test_derivative_of_j0(self):
		x = np.linspace(0.0, 30.0, 61)
		assert_allclose(bessel_j_prime(0, x), -bessel_j(1, x), atol=1e-15)

	@pytest.mark.parametrize("n", [0, 1, 2, 5, 10, 25, 49])
	def test_three_term_recurrence(self, n):
		x = np.linspace(0.5, 50.0, 400)
		expected = 2.0 * n / x * bessel_j(n, x) - bessel_j(n - 1, x)
		assert_allclose(bessel_j(n + 1, x), expected, rtol=0.0, atol=1e-10)

	@given(n=st.integers(min_value=-20, max_value=20), x=st.floats(min_value=0.5, max_value=50.0))
	@settings(max_examples=200, deadline=None)
	def test_derivative_matches_central_difference(self, n, x):
		h = 1e-6
		central = (bessel_j(n, x + h) - bessel_j(n, x - h)) / (2.0 * h)
		assert bessel_j_prime(n, x) == pytest.approx(central, abs=1e-8)

	def test_errors(self):
		with pytest.raises(RotorQMError) as info:
			bessel_j(51, 1.0)
		assert info.value.code == ErrorCode.ORDER_OUT_OF_RANGE
		with pytest.raises(RotorQMError) as info:
			bessel_j(1, -0.1)
		assert info.value.code == ErrorCode.NEGATIVE_ARGUMENT
		with pytest.raises(RotorQMError) as info:
			bessel_j(1, np.inf)
		assert info.value.code == ErrorCode.NONFINITE_VALUE


class TestZerosOracle:
	"""Cada cero tabulado queda encerrado por un cambio de signo de la serie a 1e-10 relativo."""

	@pytest.mark.parametrize("n", range(N_MAX + 1))
	def test_function_zeros_bracketed(self, n):
		for s in range(1, S_MAX + 1):
			root = bessel_zero(n, s)
			assert changes_sign(lambda x: series_j(n, x), root * (1 - REL), root * (1 + REL)), (n, s)

	@pytest.mark.parametrize("n", range(N_MAX + 1))
	def test_derivative_zeros_bracketed(self, n):
		for s in range(1, S_MAX + 1):
			root = bessel_prime_zero(n, s)
			assert changes_sign(lambda x: series_j_prime(n, x), root * (1 - REL), root * (1 + REL)), (n, s)

	@pytest.mark.parametrize("n, s", [(0, 1), (1, 1), (1, 5), (4, 3), (10, 20)])
	def test_bisection_on_series(self, n, s):
		root = bessel_zero(n, s)
		oracle = bisect_root(lambda x: series_j(n, x), root - 0.1, root + 0.1)
		assert root == pytest.approx(oracle, rel=REL)

	def test_known_values(self):
		assert bessel_zero(0, 1) == pytest.approx(2.404825557695773, rel=1e-14)
		assert bessel_zero(1, 1) == pytest.approx(3.831705970207512, rel=1e-14)
		assert bessel_prime_zero(1, 1) == pytest.approx(1.8411837813406593, rel=1e-14)
		# Para n = 0 no se cuenta x = 0: j′₀,₁ = j₁,₁
		assert bessel_prime_zero(0, 1) == pytest.approx(3.831705970207512, rel=1e-14)


class TestZeroInvariants:
	def test_interlacing(self):
		for n in range(1, N_MAX + 1):
			for s in range(1, S_MAX):
				assert n <= bessel_prime_zero(n, s) < bessel_zero(n, s) < bessel_prime_zero(n, s + 1)
				assert bessel_zero(n - 1, s) < bessel_zero(n, s) < bessel_zero(n - 1, s + 1)

	def test_j0_prime_zeros_are_j1_zeros(self):
		for s in range(1, S_MAX + 1):
			assert bessel_prime_zero(0, s) == pytest.approx(bessel_zero(1, s), rel=1e-13)

	def test_order_symmetry(self):
		for n in range(1, N_MAX + 1):
			for s in range(1, S_MAX + 1):
				assert bessel_zero(-n, s) == bessel_zero(n, s)
				assert bessel_prime_zero(-n, s) == bessel_prime_zero(n, s)

	@given(n=st.integers(min_value=0, max_value=20), s=st.integers(min_value=1, max_value=40))
	@settings(max_examples=60, deadline=None)
	def test_zero_is_a_root(self, n, s):
		root = bessel_zero(n, s)
		assert abs(bessel_j(n, root)) < 1e-12
		prime_root = bessel_prime_zero(n, s)
		assert abs(bessel_j_prime(n, prime_root)) < 1e-12

	def test_index_errors(self):
		with pytest.raises(RotorQMError) as info:
			bessel_zero(1, 0)
		assert info.value.code == ErrorCode.INDEX_OUT_OF_RANGE
		with pytest.raises(RotorQMError) as info:
			bessel_zero(1, 201)
		assert info.value.code == ErrorCode.INDEX_OUT_OF_RANGE


class TestTables:
	def test_cache_reuse(self):
		specfun.clear_cache()
		first = zero_table(2, ZeroKind.FUNCTION_ZERO, 5)
		larger = zero_table(2, ZeroKind.FUNCTION_ZERO, 12)
		assert larger.zeros[:5] == first.zeros
		assert len(larger) == 12
		assert larger.root(12) == bessel_zero(2, 12)
		full = zero_table(3, ZeroKind.DERIVATIVE_ZERO, 20)
		assert zero_table(3, ZeroKind.DERIVATIVE_ZERO, 20) is full
		specfun.clear_cache()
		rebuilt = zero_table(3, ZeroKind.DERIVATIVE_ZERO, 20)
		assert rebuilt is not full
		assert rebuilt.zeros == full.zeros

	def test_rows(self):
		rows = zero_table_rows(range(2), 3)
		assert len(rows) == 12
		assert rows[0] == {"n": 0, "kind": "FUNCTION_ZERO", "s": 1, "root": bessel_zero(0, 1)}
		assert rows[3]["kind"] == "DERIVATIVE_ZERO"

	def test_root_out_of_table(self):
		table = zero_table(0, ZeroKind.FUNCTION_ZERO, 3)
		with pytest.raises(RotorQMError):
			table.root(4)
