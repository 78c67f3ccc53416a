"""
Per-case solvers and the top-level ``solve`` dispatch.

Each ``solve_caseN`` takes parameters in canonical orientation (see
``classifier``) and enumerates the finitely many candidates its case allows,
writing every accepted pair as x = d*x1, y = d*y1 with gcd(x1, y1) = 1 and a
witness of the bindings that make the equation hold. ``solve`` classifies,
dispatches, falls back to a gcd-bounded oracle search when a case's side
condition fails, and mirrors the answer back to the caller's orientation.
"""

import itertools
import logging
from typing import Callable, Iterable, Optional

from dioph_certify.core.integer_core import (
    coprime,
    divisors,
    factorize,
    gcd,
    largest_base_below,
    perfect_root,
    require_positive,
)
from dioph_certify.core.performance_monitor import timed
from dioph_certify.core.power_equation import parametrize
from dioph_certify.oracle.brute_force import SearchBox, brute_force
from dioph_certify.protocols import get_solver_config
from dioph_certify.solving import closed_forms
from dioph_certify.solving.classifier import classify, unswap_solutions
from dioph_certify.solving.enum_dispatch_service import EnumDispatchService
from dioph_certify.solving.exceptions import InvalidParametersError, PreconditionError
from dioph_certify.solving.solution_types import (
    CaseClassification,
    CaseId,
    EquationParams,
    Provenance,
    Solution,
    SolutionSet,
    Witness,
)

logger = logging.getLogger(__name__)


def _require(condition: bool, case_id: CaseId, p: EquationParams, requirement: str) -> None:
    if not condition:
        raise PreconditionError(f"{case_id.value} solver needs {requirement}, got {p.as_tuple()}")


def _check_positive(value: int, name: str) -> None:
    try:
        require_positive(value, name)
    except ValueError as e:
        raise InvalidParametersError(str(e)) from e


def _certified(case_id: CaseId, p: EquationParams, solutions: Iterable[Solution]) -> SolutionSet:
    """Finite/empty set from a general enumeration, tagged with the matching clause."""
    solutions = list(solutions)
    rule = f"case{case_id.number}"
    prediction = closed_forms.predict(case_id, p)
    clause = "characterization"
    if prediction is not None:
        found = sorted(solution.pair for solution in solutions)
        if found == sorted(prediction.pairs):
            clause = prediction.clause
        else:
            logger.warning(
                f"{case_id.value} {p.as_tuple()}: clause {prediction.clause} predicts "
                f"{sorted(prediction.pairs)}, enumeration found {found}"
            )
    logger.debug(f"{case_id.value} {p.as_tuple()}: {len(solutions)} solutions ({clause})")
    return SolutionSet.finite(solutions, Provenance(rule, clause))


def solve_coprime(p: EquationParams) -> SolutionSet:
    """Solutions with gcd(x, y) = 1: exactly (1, 1) when c = 2, none otherwise."""
    if p.c == 2:
        witness = Witness.of(d=1, x1=1, y1=1)
        return SolutionSet.finite([Solution(1, 1, witness)], Provenance("coprime", "c-equals-2"))
    return SolutionSet.empty(Provenance("coprime", "c-not-2"))


def solve_case1(p: EquationParams) -> SolutionSet:
    """n = m = k+l: every (d, d) when c = 2, nothing otherwise."""
    _require(p.n == p.m == p.kl, CaseId.CASE1, p, "n = m = k+l")
    if p.c == 2:
        return SolutionSet.diagonal(Provenance("case1", "c-equals-2"))
    return SolutionSet.empty(Provenance("case1", "c-not-2"))


def solve_case2(p: EquationParams) -> SolutionSet:
    """
    n < m < k+l with n <= k.

    Reducing by d^n forces y1 = 1 and x1^n = d^(m-n), after which the equation
    collapses to c * d^(k+l-n) * x1^(k-n) = 2.
    """
    _require(p.n < p.m < p.kl and p.n <= p.k, CaseId.CASE2, p, "n < m < k+l and n ≤ k")
    solutions = []
    if 2 % p.c == 0:
        for d in divisors(2 // p.c):
            x1 = perfect_root(d ** (p.m - p.n), p.n)
            if x1 is None or p.c * d ** (p.kl - p.n) * x1 ** (p.k - p.n) != 2:
                continue
            solutions.append(Solution(d * x1, d, Witness.of(d=d, x1=x1, y1=1)))
    return _certified(CaseId.CASE2, p, solutions)


def solve_case3(p: EquationParams) -> SolutionSet:
    """
    k+l < n < m.

    With d^(m-(k+l)) = r * x1^k and d^(n-(k+l)) = s * y1^l the equation becomes
    c = x1^(n-k) * s + y1^(m-l) * r, which bounds x1, y1, r and s by c.
    """
    _require(p.kl < p.n < p.m, CaseId.CASE3, p, "k+l < n < m")
    c = p.c
    solutions = []
    x1 = 1
    while x1 ** (p.n - p.k) <= c - 1:
        a = x1 ** (p.n - p.k)
        y1 = 1
        while y1 ** (p.m - p.l) <= c - 1:
            b = y1 ** (p.m - p.l)
            if coprime(x1, y1):
                for s in range(1, (c - b) // a + 1):
                    remainder = c - a * s
                    if remainder % b:
                        continue
                    r = remainder // b
                    d = perfect_root(r * x1**p.k, p.m - p.kl)
                    if d is None or d ** (p.n - p.kl) != s * y1**p.l:
                        continue
                    witness = Witness.of(d=d, x1=x1, y1=y1, r=r, s=s)
                    solutions.append(Solution(d * x1, d * y1, witness))
            y1 += 1
        x1 += 1
    return _certified(CaseId.CASE3, p, solutions)


def _case4_cofactors(d: int, p: EquationParams) -> Iterable[int]:
    """x1 with d^(k+l-n) | x1^n and x1^n | d^(m-n), built prime by prime from d."""
    choices = []
    for prime, exponent in factorize(d):
        low = -(-(p.kl - p.n) * exponent // p.n)
        high = (p.m - p.n) * exponent // p.n
        if low > high:
            return
        choices.append([prime**b for b in range(low, high + 1)])
    for combination in itertools.product(*choices):
        x1 = 1
        for factor in combination:
            x1 *= factor
        yield x1


def solve_case4(p: EquationParams, bound: int) -> SolutionSet:
    """
    n < k+l < m with n <= k.

    Here y1 = 1 and the solutions are (d*x1, d) with
    x1^n + d^(m-n) = c * d^(k+l-n) * x1^k, so d is the gcd of the pair. Only the
    exponent tuples in ``closed_forms.CASE4_FIXED_TUPLES`` have a certified
    answer; every other tuple is searched for d = 1..bound.

    Args:
        p: Canonical Case 4 parameters
        bound: Largest gcd searched

    Returns:
        Certified set for the fixed tuples, otherwise a bounded_incomplete set
    """
    _require(p.n < p.kl < p.m and p.n <= p.k, CaseId.CASE4, p, "n < k+l < m and n ≤ k")
    _check_positive(bound, "bound")

    prediction = closed_forms.predict(CaseId.CASE4, p)
    if prediction is not None:
        solutions = [
            Solution(x, y, Witness.of(d=1, x1=1, y1=1, R=1, S=1)) for x, y in prediction.pairs
        ]
        return SolutionSet.finite(solutions, Provenance("case4", prediction.clause))

    solutions = []
    for d in range(1, bound + 1):
        big_power = d ** (p.m - p.n)
        small_power = d ** (p.kl - p.n)
        for x1 in _case4_cofactors(d, p):
            x1_n = x1**p.n
            if x1_n + big_power != p.c * small_power * x1**p.k:
                continue
            witness = Witness.of(d=d, x1=x1, y1=1, R=big_power // x1_n, S=x1_n // small_power)
            solutions.append(Solution(d * x1, d, witness))
    logger.debug(f"Case4 {p.as_tuple()}: {len(solutions)} solutions with gcd ≤ {bound}")
    return SolutionSet.bounded(solutions, bound, Provenance("case4", "gcd-bounded"))


def solve_case5(p: EquationParams) -> SolutionSet:
    """
    n = k+l < m.

    y1 = 1 and d^(m-n) = r * x1^k with r = c - x1^(n-k), so x1 ranges over the
    u with u^(n-k) < c; the largest such u is recorded as M.
    """
    _require(p.n == p.kl < p.m, CaseId.CASE5, p, "n = k+l < m")
    if p.c == 1:
        return _certified(CaseId.CASE5, p, [])

    big_m = largest_base_below(p.c - 1, p.n - p.k)
    prediction = closed_forms.predict(CaseId.CASE5, p)
    family_extras = prediction.extras if prediction else {}

    solutions = []
    for x1 in range(1, big_m + 1):
        r = p.c - x1 ** (p.n - p.k)
        d = perfect_root(r * x1**p.k, p.m - p.n)
        if d is None:
            continue
        bindings = {"x1": x1, "y1": 1, "r": r, "d": d, "M": big_m}
        if family_extras and (d * x1, d) in prediction.pairs:
            bindings.update(family_extras)
        solutions.append(Solution(d * x1, d, Witness(bindings)))
    return _certified(CaseId.CASE5, p, solutions)


def solve_case6(p: EquationParams) -> SolutionSet:
    """
    m < n = k+l with m <= l (solver orientation).

    x1 = 1, y1^m = d^(n-m) and c * y1^l = 2. The power equation gives
    y1 = t^(L/m), d = t^(L/(n-m)) with L = lcm(m, n-m).
    """
    _require(p.m < p.n == p.kl and p.m <= p.l, CaseId.CASE6, p, "m < n = k+l and m ≤ l")
    big_l, e1, e2, e3 = closed_forms.case6_exponents(p)
    family = parametrize(p.m, p.n - p.m)

    solutions = []
    if 2 % p.c == 0:
        y1 = perfect_root(2 // p.c, p.l)
        t = perfect_root(y1, family.b1) if y1 is not None else None
        if t is not None:
            d = t**family.a1
            witness = Witness.of(t=t, d=d, x1=1, y1=y1, L=big_l, e1=e1, e2=e2, e3=e3)
            solutions.append(Solution(d, d * y1, witness))
    return _certified(CaseId.CASE6, p, solutions)


def solve_case7(p: EquationParams) -> SolutionSet:
    """m = n < k+l: x1 = y1 = 1 and 2 = c * d^(k+l-n)."""
    _require(p.n == p.m < p.kl, CaseId.CASE7, p, "m = n < k+l")
    solutions = []
    if 2 % p.c == 0:
        d = perfect_root(2 // p.c, p.kl - p.n)
        if d is not None:
            solutions.append(Solution(d, d, Witness.of(d=d, x1=1, y1=1)))
    return _certified(CaseId.CASE7, p, solutions)


def solve_case8(p: EquationParams) -> SolutionSet:
    """
    k+l < m = n.

    d^(n-(k+l)) = r * x1^k * y1^l and r * (x1^n + y1^n) = c, so r runs over the
    divisors of c and (x1, y1) over the representations of c/r as a sum of two
    n-th powers.
    """
    _require(p.kl < p.n == p.m, CaseId.CASE8, p, "k+l < m = n")
    solutions = []
    for r in divisors(p.c):
        q = p.c // r
        x1 = 1
        while x1**p.n < q:
            y1 = perfect_root(q - x1**p.n, p.n)
            if y1 is not None and coprime(x1, y1):
                d = perfect_root(r * x1**p.k * y1**p.l, p.n - p.kl)
                if d is not None:
                    witness = Witness.of(d=d, x1=x1, y1=y1, r=r)
                    solutions.append(Solution(d * x1, d * y1, witness))
            x1 += 1
    return _certified(CaseId.CASE8, p, solutions)


def fallback_search(p: EquationParams, bound: int, box: int) -> SolutionSet:
    """Oracle search over [1, box]^2 restricted to gcd(x, y) <= bound."""
    search_box = SearchBox(x_max=box, y_max=box, gcd_max=bound)
    solutions = []
    for x, y in brute_force(p, search_box):
        d = gcd(x, y)
        solutions.append(Solution(x, y, Witness.of(d=d, x1=x // d, y1=y // d)))
    logger.debug(f"Fallback for {p.as_tuple()}: {len(solutions)} pairs in box {box}")
    return SolutionSet.bounded(
        solutions, bound, Provenance("fallback", "gcd-bounded-search"), search_limit=box
    )


def _on_canonical(solver: Callable[[EquationParams], SolutionSet]):
    def handler(classification: CaseClassification, **kwargs) -> SolutionSet:
        return solver(classification.canonical)

    return handler


class CaseSolverService(EnumDispatchService[CaseId]):
    """Routes a classification to the solver of its case."""

    def __init__(self):
        super().__init__()
        self._register_handlers(
            {
                CaseId.CASE1: _on_canonical(solve_case1),
                CaseId.CASE2: _on_canonical(solve_case2),
                CaseId.CASE3: _on_canonical(solve_case3),
                CaseId.CASE4: self._solve_case4,
                CaseId.CASE5: _on_canonical(solve_case5),
                CaseId.CASE6: _on_canonical(solve_case6),
                CaseId.CASE7: _on_canonical(solve_case7),
                CaseId.CASE8: _on_canonical(solve_case8),
            }
        )

    def _determine_strategy(self, context: CaseClassification, **kwargs) -> CaseId:
        return context.case_id

    @staticmethod
    def _solve_case4(classification: CaseClassification, *, bound: int, **kwargs) -> SolutionSet:
        return solve_case4(classification.canonical, bound)


_service: Optional[CaseSolverService] = None


def get_case_solver_service() -> CaseSolverService:
    global _service
    if _service is None:
        _service = CaseSolverService()
    return _service


@timed("solve")
def solve(
    p: EquationParams, bound: Optional[int] = None, box: Optional[int] = None
) -> tuple[CaseClassification, SolutionSet]:
    """
    Classify ``p``, run its case solver and return pairs in the caller's orientation.

    Args:
        p: Equation parameters
        bound: gcd bound for bounded sets; defaults to the configured default bound
        box: Side of the fallback search box; defaults to the configured default box

    Returns:
        ``(classification, solution_set)``. Witnesses are in canonical coordinates.

    Raises:
        InvalidParametersError: If ``p`` is malformed or ``bound``/``box`` < 1
    """
    config = get_solver_config()
    bound = config.default_bound if bound is None else bound
    box = config.default_box if box is None else box
    _check_positive(bound, "bound")
    _check_positive(box, "box")

    classification = classify(p)
    if classification.hypothesis_met:
        result = get_case_solver_service().dispatch(classification, bound=bound)
    else:
        logger.debug(
            f"{classification.case_id.value} side condition fails for {p.as_tuple()}, "
            f"using bounded search"
        )
        result = fallback_search(classification.canonical, bound, box)
    return classification, unswap_solutions(result, classification.swapped)
