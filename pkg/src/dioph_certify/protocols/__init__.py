"""
Configuration protocol.

A single configuration object with a module-level accessor pair, so the CLI,
the solvers and the tests agree on defaults.
"""

from .solver_config import (
    BOUND_ENV_VAR,
    SolverConfig,
    get_solver_config,
    reset_solver_config,
    set_solver_config,
)

__all__ = [
    "BOUND_ENV_VAR",
    "SolverConfig",
    "get_solver_config",
    "reset_solver_config",
    "set_solver_config",
]
