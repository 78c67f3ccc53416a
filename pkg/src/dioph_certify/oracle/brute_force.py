"""
Brute-force oracle.

Exhaustive exact evaluation of x^n + y^m = c * x^k * y^l over a box. It shares
nothing with the case solvers beyond the parameter types, which is what makes
it usable as ground truth for them.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Optional

from dioph_certify.core.integer_core import gcd
from dioph_certify.core.performance_monitor import timer
from dioph_certify.solving.exceptions import InvalidParametersError
from dioph_certify.solving.solution_types import EquationParams, SolutionKind, SolutionSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchBox:
    """Search region [1, x_max] x [1, y_max] with optional gcd filters.

    Attributes:
        x_max: Largest x searched
        y_max: Largest y searched
        coprime_only: Keep only pairs with gcd(x, y) = 1
        gcd_max: Keep only pairs with gcd(x, y) <= gcd_max
    """

    x_max: int
    y_max: int
    coprime_only: bool = False
    gcd_max: Optional[int] = None

    def __post_init__(self):
        for name in ("x_max", "y_max", "gcd_max"):
            value = getattr(self, name)
            if value is None and name == "gcd_max":
                continue
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise InvalidParametersError(f"{name.replace('_', '')} must be ≥ 1")

    @classmethod
    def square(cls, side: int, **filters: Any) -> "SearchBox":
        return cls(x_max=side, y_max=side, **filters)

    def admits(self, x: int, y: int) -> bool:
        """Whether (x, y) lies in the box and passes the filters."""
        if not (1 <= x <= self.x_max and 1 <= y <= self.y_max):
            return False
        if not self.coprime_only and self.gcd_max is None:
            return True
        g = gcd(x, y)
        if self.coprime_only and g != 1:
            return False
        return self.gcd_max is None or g <= self.gcd_max


def brute_force(p: EquationParams, box: SearchBox) -> list[tuple[int, int]]:
    """
    Every pair in ``box`` that satisfies the equation, sorted lexicographically.

    The double loop is unpruned; powers are tabulated once per coordinate.

    Args:
        p: Equation parameters
        box: Search region and filters

    Returns:
        Sorted list of solutions
    """
    x_values = range(1, box.x_max + 1)
    y_values = range(1, box.y_max + 1)
    y_terms = [(y, y**p.m, p.c * y**p.l) for y in y_values]

    found = []
    for x in x_values:
        x_n = x**p.n
        x_k = x**p.k
        for y, y_m, c_y_l in y_terms:
            if x_n + y_m == c_y_l * x_k and box.admits(x, y):
                found.append((x, y))
    logger.debug(f"Oracle {p.as_tuple()} in {box}: {len(found)} solutions")
    return found


@dataclass
class CrosscheckReport:
    """Comparison of a solver's answer with the oracle on one box.

    Attributes:
        params: Instance checked
        kind: Kind of the solver's solution set
        box: Box the oracle actually searched
        soundness_failures: Solver pairs that do not solve the equation or that
            the oracle did not find
        completeness_failures: Oracle pairs missing from the solver's set
        oracle_count: Number of oracle solutions
        solver_count: Number of solver pairs inside ``box``
        elapsed_ms: Time spent in the oracle search and comparison
    """

    params: EquationParams
    kind: SolutionKind
    box: SearchBox
    soundness_failures: list[tuple[int, int]] = field(default_factory=list)
    completeness_failures: list[tuple[int, int]] = field(default_factory=list)
    oracle_count: int = 0
    solver_count: int = 0
    elapsed_ms: float = 0.0

    @property
    def discrepancies(self) -> int:
        return len(self.soundness_failures) + len(self.completeness_failures)

    @property
    def ok(self) -> bool:
        return self.discrepancies == 0

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "soundness_failures": [[str(x), str(y)] for x, y in self.soundness_failures],
            "completeness_failures": [[str(x), str(y)] for x, y in self.completeness_failures],
            "oracle_count": str(self.oracle_count),
            "solver_count": str(self.solver_count),
            "box": {"x_max": str(self.box.x_max), "y_max": str(self.box.y_max)},
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _oracle_box(box: SearchBox, s: SolutionSet) -> SearchBox:
    """Narrow ``box`` to the region where ``s`` claims completeness."""
    if s.kind is not SolutionKind.BOUNDED_INCOMPLETE:
        return box
    x_max, y_max = box.x_max, box.y_max
    if s.search_limit is not None:
        x_max, y_max = min(x_max, s.search_limit), min(y_max, s.search_limit)
    gcd_max = s.bound if box.gcd_max is None else min(box.gcd_max, s.bound)
    return SearchBox(x_max, y_max, coprime_only=box.coprime_only, gcd_max=gcd_max)


def crosscheck(p: EquationParams, box: SearchBox, s: SolutionSet) -> CrosscheckReport:
    """
    Compare ``s`` with the oracle's solutions in ``box``.

    Bounded sets are compared only where they claim completeness: pairs with
    gcd(x, y) <= bound, inside the set's search limit when it has one.

    Args:
        p: Parameters ``s`` was solved for (caller's orientation)
        box: Oracle search region
        s: Solution set to check

    Returns:
        CrosscheckReport; ``report.ok`` is False on any discrepancy
    """
    with timer("crosscheck", params=p.as_tuple()) as record:
        search_box = _oracle_box(box, s)
        oracle_pairs = brute_force(p, search_box)
        oracle_set = set(oracle_pairs)

        solver_in_box = [
            pair
            for pair in s.pairs_in_box(search_box.x_max, search_box.y_max)
            if search_box.admits(*pair)
        ]
        soundness = [pair for pair in solver_in_box if pair not in oracle_set]
        # Pairs outside the box are still checked by direct evaluation
        soundness += [
            pair for pair in s.pairs() if pair not in solver_in_box and not p.holds(*pair)
        ]
        completeness = [pair for pair in oracle_pairs if not s.contains(*pair)]

    report = CrosscheckReport(
        params=p,
        kind=s.kind,
        box=search_box,
        soundness_failures=sorted(set(soundness)),
        completeness_failures=completeness,
        oracle_count=len(oracle_pairs),
        solver_count=len(solver_in_box),
        elapsed_ms=record.elapsed_ms,
    )
    if not report.ok:
        logger.warning(
            f"Crosscheck {p.as_tuple()} ({s.kind.value}): "
            f"soundness failures {report.soundness_failures}, "
            f"completeness failures {report.completeness_failures}"
        )
    return report
