"""pytest configuration and fixtures for dioph-certify tests."""

import itertools
import logging

import pytest

from dioph_certify.core.log_utils import PACKAGE_LOGGER_NAME
from dioph_certify.protocols import BOUND_ENV_VAR, reset_solver_config
from dioph_certify.solving.solution_types import EquationParams


@pytest.fixture(autouse=True)
def clean_config(monkeypatch):
    """Fresh configuration, no environment override and no CLI log handlers."""
    monkeypatch.delenv(BOUND_ENV_VAR, raising=False)
    reset_solver_config()
    yield
    reset_solver_config()
    package_logger = logging.getLogger(PACKAGE_LOGGER_NAME)
    for handler in list(package_logger.handlers):
        package_logger.removeHandler(handler)
        handler.close()
    package_logger.setLevel(logging.NOTSET)


@pytest.fixture
def small_grid():
    """A grid that touches every case and both orientations."""
    return [
        EquationParams(n, m, k, l, c)
        for n, m, k, l, c in itertools.product(
            range(1, 5), range(1, 5), range(1, 3), range(1, 3), range(1, 7)
        )
    ]
