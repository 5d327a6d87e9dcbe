"""
Fixtures compartidos de la suite de rotorqm.
"""

import numpy as np
import pytest

from rotorqm.core import ELECTRON, RotatingFrame, reload_settings
from rotorqm.core.settings import PRECISION_ENV


# Parámetros de las figuras: electrón, R₀ = 10 μm, v = −100 m/s
FIG_RADIUS = 1e-5
FIG_OMEGA = -1e7


@pytest.fixture
def electron():
	return ELECTRON


@pytest.fixture
def fig_frame():
	return RotatingFrame(omega=FIG_OMEGA, radius=FIG_RADIUS)


@pytest.fixture
def rng():
	return np.random.default_rng(20240613)


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
	"""Cada test parte de los settings por defecto, sin ROTORQM_PRECISION."""
	monkeypatch.delenv(PRECISION_ENV, raising=False)
	reload_settings()
	yield
	monkeypatch.delenv(PRECISION_ENV, raising=False)
	reload_settings()


