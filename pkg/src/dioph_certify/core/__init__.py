"""
Core utilities.

Exact integer arithmetic, the power equation x^a = y^b, timing helpers and
logging set-up. Nothing here knows about the eight cases.
"""

from .integer_core import (
    Factorization,
    PositiveInt,
    coprime,
    divisors,
    factorize,
    gcd,
    ipow,
    iroot,
    is_prime,
    largest_base_below,
    lcm,
    perfect_root,
    require_positive,
)
from .power_equation import (
    PowerEqParametrization,
    enumerate_solutions,
    parametrize,
    recover_parameter,
)

__all__ = [
    "Factorization",
    "PositiveInt",
    "coprime",
    "divisors",
    "factorize",
    "gcd",
    "ipow",
    "iroot",
    "is_prime",
    "largest_base_below",
    "lcm",
    "perfect_root",
    "require_positive",
    "PowerEqParametrization",
    "enumerate_solutions",
    "parametrize",
    "recover_parameter",
]
