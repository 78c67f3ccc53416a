"""Solver configuration.

Holds the defaults the CLI and the solvers fall back on when no explicit value
is passed. Applications may install their own instance with
``set_solver_config``.
"""

import logging
import os
from dataclasses import dataclass
from typing import Optional

from dioph_certify.solving.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

BOUND_ENV_VAR = "DIOPH_DEFAULT_BOUND"


@dataclass
class SolverConfig:
    """Defaults for solving, searching and logging.

    Attributes:
        default_bound: gcd bound for bounded (incomplete) solution sets
        default_box: Side of the square oracle search box
        default_tmax: Number of family members ``powereq`` lists
        default_workers: Process count for grid sweeps
        log_level: Level name for the package logger
        log_file: Optional file receiving log output
        performance_logger_name: Logger used by the timing utilities
        performance_threshold_ms: Timings below this are not logged
    """

    default_bound: int = 200
    default_box: int = 300
    default_tmax: int = 10
    default_workers: int = 1
    log_level: str = "WARNING"
    log_file: Optional[str] = None
    performance_logger_name: str = "dioph_certify.performance"
    performance_threshold_ms: float = 0.0


def _bound_from_environment() -> Optional[int]:
    raw = os.environ.get(BOUND_ENV_VAR)
    if raw is None or not raw.strip():
        return None
    try:
        value = int(raw.strip())
    except ValueError:
        raise ConfigurationError(f"{BOUND_ENV_VAR} must be a positive integer, got {raw!r}")
    if value < 1:
        raise ConfigurationError(f"{BOUND_ENV_VAR} must be ≥ 1, got {value}")
    return value


# Global config instance (set by application)
_solver_config: Optional[SolverConfig] = None


def set_solver_config(config: SolverConfig) -> None:
    """Set the global solver configuration.

    Args:
        config: SolverConfig instance
    """
    global _solver_config
    _solver_config = config


def get_solver_config() -> SolverConfig:
    """Get the current solver configuration.

    When nothing has been set, a default is built with ``DIOPH_DEFAULT_BOUND``
    applied. The environment is read on every such call.

    Returns:
        Current SolverConfig

    Raises:
        ConfigurationError: If ``DIOPH_DEFAULT_BOUND`` is not a positive integer
    """
    if _solver_config is not None:
        return _solver_config
    config = SolverConfig()
    bound = _bound_from_environment()
    if bound is not None:
        logger.debug(f"Default bound {bound} taken from {BOUND_ENV_VAR}")
        config.default_bound = bound
    return config


def reset_solver_config() -> None:
    """Forget any installed configuration."""
    global _solver_config
    _solver_config = None
