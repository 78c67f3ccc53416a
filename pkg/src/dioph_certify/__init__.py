"""
dioph-certify: certified solver for x^n + y^m = c·x^k·y^l over positive integers.

Architecture:
- Tier 1 (core): exact integer primitives, the power equation x^a = y^b,
  timing and logging helpers
- Tier 2 (protocols): solver configuration
- Tier 3 (solving): classification into eight exponent cases, per-case
  solvers with witnesses, witness validation
- Tier 4 (oracle, io, cli): brute-force ground truth, JSONL reports and the
  ``dioph`` command

Key Features:
- Complete solution sets with a per-solution witness wherever a case is settled
- gcd-bounded search, clearly labelled, where it is not
- Every answer can be cross-checked against exhaustive search
"""

__version__ = "0.1.0"

from dioph_certify.core.integer_core import (
    Factorization,
    coprime,
    divisors,
    factorize,
    gcd,
    ipow,
    iroot,
    lcm,
    perfect_root,
)
from dioph_certify.core.power_equation import (
    PowerEqParametrization,
    enumerate_solutions,
    parametrize,
    recover_parameter,
)
from dioph_certify.protocols import SolverConfig, get_solver_config, set_solver_config
from dioph_certify.solving.exceptions import (
    ConfigurationError,
    DiophError,
    InvalidParametersError,
    PreconditionError,
)
from dioph_certify.solving.solution_types import (
    CaseClassification,
    CaseId,
    EquationParams,
    Provenance,
    Solution,
    SolutionKind,
    SolutionSet,
    Witness,
)
from dioph_certify.solving.classifier import classify, unswap_solutions
from dioph_certify.solving.case_solvers import solve, solve_coprime
from dioph_certify.solving.witness_validation import validate_solution_set, validate_witness
from dioph_certify.oracle.brute_force import CrosscheckReport, SearchBox, brute_force, crosscheck

__all__ = [
    "__version__",
    "Factorization",
    "coprime",
    "divisors",
    "factorize",
    "gcd",
    "ipow",
    "iroot",
    "lcm",
    "perfect_root",
    "PowerEqParametrization",
    "enumerate_solutions",
    "parametrize",
    "recover_parameter",
    "SolverConfig",
    "get_solver_config",
    "set_solver_config",
    "ConfigurationError",
    "DiophError",
    "InvalidParametersError",
    "PreconditionError",
    "CaseClassification",
    "CaseId",
    "EquationParams",
    "Provenance",
    "Solution",
    "SolutionKind",
    "SolutionSet",
    "Witness",
    "classify",
    "unswap_solutions",
    "solve",
    "solve_coprime",
    "validate_solution_set",
    "validate_witness",
    "CrosscheckReport",
    "SearchBox",
    "brute_force",
    "crosscheck",
]
