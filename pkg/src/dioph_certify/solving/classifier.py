"""
Case classification.

Exchanging x and y turns (n, m, k, l) into (m, n, l, k), so every instance can
be oriented with n <= m before comparing n, m and k + l. Case 6 is the one
exception: its solver works in the orientation m < n = k + l, so a Case 6
instance is flipped back after orientation.
"""

import dataclasses
import logging

from dioph_certify.solving.exceptions import InvalidParametersError
from dioph_certify.solving.solution_types import (
    CaseClassification,
    CaseId,
    EquationParams,
    SolutionSet,
)

logger = logging.getLogger(__name__)


def _case_for_oriented(p: EquationParams) -> CaseId:
    """Case of parameters already oriented with n <= m (Case 6 as n < m = k+l)."""
    n, m, s = p.n, p.m, p.kl
    if n == m:
        if s == n:
            return CaseId.CASE1
        return CaseId.CASE7 if s > n else CaseId.CASE8
    if s > m:
        return CaseId.CASE2
    if s == m:
        return CaseId.CASE6
    if s > n:
        return CaseId.CASE4
    if s == n:
        return CaseId.CASE5
    return CaseId.CASE3


def _hypothesis_met(case_id: CaseId, canonical: EquationParams) -> bool:
    if case_id in (CaseId.CASE2, CaseId.CASE4):
        return canonical.n <= canonical.k
    if case_id is CaseId.CASE6:
        return canonical.m <= canonical.l
    return True


def classify(p: EquationParams) -> CaseClassification:
    """
    Assign exactly one of the eight cases.

    Args:
        p: Parameters as supplied by the caller

    Returns:
        CaseClassification with the canonical orientation the case solver expects

    Raises:
        InvalidParametersError: If ``p`` is not an EquationParams
    """
    if not isinstance(p, EquationParams):
        raise InvalidParametersError(f"Expected EquationParams, got {type(p).__name__}")

    swapped = p.n > p.m
    oriented = p.mirrored() if swapped else p
    case_id = _case_for_oriented(oriented)

    if case_id is CaseId.CASE6:
        # Solver orientation is m < n = k + l
        canonical = oriented.mirrored()
        swapped = not swapped
    else:
        canonical = oriented

    classification = CaseClassification(
        case_id=case_id,
        swapped=swapped,
        hypothesis_met=_hypothesis_met(case_id, canonical),
        canonical=canonical,
        original=p,
    )
    logger.debug(
        f"Classified {p.as_tuple()} as {case_id.value} "
        f"(swapped={swapped}, hypothesis_met={classification.hypothesis_met})"
    )
    return classification


def unswap_solutions(s: SolutionSet, swapped: bool) -> SolutionSet:
    """Mirror every pair back to the caller's orientation when ``swapped``.

    Witnesses stay in canonical coordinates. The diagonal family and (1, 1)
    are fixed points.
    """
    if not swapped:
        return s
    return s.with_solutions(dataclasses.replace(sol, x=sol.y, y=sol.x) for sol in s.solutions)
