"""
Generic re-checking of witnesses.

A witness certifies one solution through the defining relations of its case.
Validation recomputes every relation from the bindings alone, so a witness with
any binding changed fails even when the pair itself still solves the equation.
"""

import logging
from typing import Callable, Dict, Optional

from dioph_certify.core.integer_core import coprime, lcm
from dioph_certify.solving.solution_types import (
    CaseClassification,
    CaseId,
    EquationParams,
    SolutionSet,
    Witness,
)

logger = logging.getLogger(__name__)


def _case1(p: EquationParams, w: Witness) -> bool:
    return w["x1"] == w["y1"] == 1 and p.c == 2


def _case2(p: EquationParams, w: Witness) -> bool:
    d, x1 = w["d"], w["x1"]
    return (
        w["y1"] == 1
        and p.k >= p.n
        and x1**p.n == d ** (p.m - p.n)
        and p.c * d ** (p.kl - p.n) * x1 ** (p.k - p.n) == 2
    )


def _case3(p: EquationParams, w: Witness) -> bool:
    if not {"r", "s"} <= set(w):
        return False
    d, x1, y1, r, s = w["d"], w["x1"], w["y1"], w["r"], w["s"]
    return (
        d ** (p.m - p.kl) == r * x1**p.k
        and d ** (p.n - p.kl) == s * y1**p.l
        and p.c == x1 ** (p.n - p.k) * s + y1 ** (p.m - p.l) * r
    )


def _case4(p: EquationParams, w: Witness) -> bool:
    if not {"R", "S"} <= set(w):
        return False
    d, x1 = w["d"], w["x1"]
    x1_n = x1**p.n
    return (
        w["y1"] == 1
        and d ** (p.m - p.n) == w["R"] * x1_n
        and x1_n == w["S"] * d ** (p.kl - p.n)
        and x1_n + d ** (p.m - p.n) == p.c * d ** (p.kl - p.n) * x1**p.k
    )


def _case5(p: EquationParams, w: Witness) -> bool:
    if "r" not in w:
        return False
    d, x1, r = w["d"], w["x1"], w["r"]
    gap = p.n - p.k
    if not (w["y1"] == 1 and r == p.c - x1**gap and d ** (p.m - p.n) == r * x1**p.k):
        return False
    big_m = w.get("M")
    if big_m is not None and not (big_m**gap < p.c <= (big_m + 1) ** gap and x1 <= big_m):
        return False
    if "rho" in w or "v" in w:
        rho, v = w.get("rho"), w.get("v")
        if rho is None or v is None:
            return False
        return (
            p.c == 3
            and p.k == rho * v
            and p.m == p.l + v * rho + v
            and p.n == rho * v + p.l
            and x1 == 2
            and d == 2**rho
        )
    return True


def _case6(p: EquationParams, w: Witness) -> bool:
    if not {"t", "L", "e1", "e2", "e3"} <= set(w):
        return False
    t, d, y1, big_l = w["t"], w["d"], w["y1"], w["L"]
    if big_l != lcm(p.m, p.n - p.m):
        return False
    return (
        w["x1"] == 1
        and w["e1"] == (big_l // p.m) * (p.n - p.m)
        and w["e2"] == big_l
        and w["e3"] == big_l + (big_l // p.m) * p.l
        and y1**p.m == d ** (p.n - p.m)
        and y1 == t ** (big_l // p.m)
        and d == t ** (big_l // (p.n - p.m))
        and p.c * t ** (w["e3"] - w["e2"]) == 2
    )


def _case7(p: EquationParams, w: Witness) -> bool:
    return w["x1"] == w["y1"] == 1 and p.c * w["d"] ** (p.kl - p.n) == 2


def _case8(p: EquationParams, w: Witness) -> bool:
    if "r" not in w:
        return False
    d, x1, y1, r = w["d"], w["x1"], w["y1"], w["r"]
    return (
        d ** (p.n - p.kl) == r * x1**p.k * y1**p.l
        and r * (x1**p.n + y1**p.n) == p.c
    )


_CASE_CHECKS: Dict[CaseId, Callable[[EquationParams, Witness], bool]] = {
    CaseId.CASE1: _case1,
    CaseId.CASE2: _case2,
    CaseId.CASE3: _case3,
    CaseId.CASE4: _case4,
    CaseId.CASE5: _case5,
    CaseId.CASE6: _case6,
    CaseId.CASE7: _case7,
    CaseId.CASE8: _case8,
}


def validate_witness(
    p: EquationParams, x: int, y: int, w: Witness, case_id: Optional[CaseId]
) -> bool:
    """
    Re-check a witness against its case's defining relations.

    Args:
        p: Canonical parameters of the case
        x: Solution x in canonical orientation
        y: Solution y in canonical orientation
        w: Witness to check
        case_id: Case whose relations apply; None checks only the gcd
            normalization and the equation

    Returns:
        True iff x = d*x1, y = d*y1 with coprime x1, y1, the equation holds and
        every relation of the case holds under ``w``
    """
    if not {"d", "x1", "y1"} <= set(w):
        return False
    d, x1, y1 = w["d"], w["x1"], w["y1"]
    if x != d * x1 or y != d * y1 or not coprime(x1, y1):
        return False
    if not p.holds(x, y):
        return False
    if case_id is None:
        return True
    return _CASE_CHECKS[case_id](p, w)


def validate_solution_set(classification: CaseClassification, s: SolutionSet) -> bool:
    """
    Validate every witness of a set returned by ``solve``.

    Pairs are mirrored back to canonical orientation before checking. Fallback
    and coprime witnesses are checked with ``case_id=None``.
    """
    case_id: Optional[CaseId] = classification.case_id
    if s.provenance.rule in ("fallback", "coprime"):
        case_id = None
    for solution in s.solutions:
        if solution.witness is None:
            return False
        x, y = (solution.y, solution.x) if classification.swapped else solution.pair
        if not validate_witness(classification.canonical, x, y, solution.witness, case_id):
            logger.warning(f"Witness {solution.witness.bindings} rejected for {(x, y)}")
            return False
    return True
