"""Shared fixtures and the fixed-seed Hypothesis profile."""

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from chebyshev_derivations.config import reload_settings
from chebyshev_derivations.log import configure_logging

settings.register_profile(
    "fixed-seed",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("fixed-seed")


@pytest.fixture(autouse=True)
def quiet_defaults():
    """Fresh settings and WARNING-level logging for every test."""
    reload_settings()
    configure_logging("WARNING")
    yield
    reload_settings()


@pytest.fixture
def half():
    return Fraction(1, 2)
