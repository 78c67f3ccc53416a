"""
Closed-form answers for special parameter families.

For several cases the full solution set is known outright for particular
coefficients or exponent tuples. Each prediction here is a complete answer in
canonical coordinates. The case solvers still enumerate the general conditions;
a matching prediction only names the clause in the result's provenance. Case 4
is the exception: for its two fixed exponent tuples the prediction is the only
certified answer available.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional

from dioph_certify.core.integer_core import is_prime, lcm
from dioph_certify.solving.solution_types import CaseId, EquationParams

logger = logging.getLogger(__name__)

# Case 4 exponent tuples (n, m, k, l) with a certified answer
CASE4_FIXED_TUPLES = frozenset({(2, 6, 2, 2), (2, 6, 3, 1)})


@dataclass(frozen=True)
class ClosedForm:
    """A complete solution set predicted without enumeration.

    Attributes:
        clause: Short name of the family the prediction comes from
        pairs: Every solution, canonical coordinates
        extras: Additional witness bindings implied by the family
    """

    clause: str
    pairs: tuple[tuple[int, int], ...] = ()
    extras: Dict[str, int] = field(default_factory=dict)


def _unit_or_empty(clause: str, p: EquationParams) -> ClosedForm:
    return ClosedForm(clause, ((1, 1),) if p.c == 2 else ())


def _case2(p: EquationParams) -> Optional[ClosedForm]:
    if p.n > p.k:
        return None
    return _unit_or_empty("c-equals-2-only", p)


def _case3(p: EquationParams) -> Optional[ClosedForm]:
    if p.c == 2:
        return ClosedForm("c-equals-2", ((1, 1),))
    if p.c in (1, 3, 4, 5):
        return ClosedForm("small-coefficient", ())
    return None


def _case4(p: EquationParams) -> Optional[ClosedForm]:
    if (p.n, p.m, p.k, p.l) not in CASE4_FIXED_TUPLES:
        return None
    return _unit_or_empty("fixed-exponents", p)


def _case5(p: EquationParams) -> Optional[ClosedForm]:
    if p.c == 1:
        return ClosedForm("c-equals-1", ())
    if p.c == 2:
        return ClosedForm("c-equals-2", ((1, 1),))
    if p.c != 3:
        return None

    gap = p.m - p.n
    if p.n - p.k >= 2:
        if gap == 1:
            return ClosedForm("c-equals-3-single", ((2, 2),))
        return ClosedForm("c-equals-3-none", ())
    # n - k == 1, so l == 1
    if gap == 1:
        return ClosedForm("c-equals-3-pair", ((2, 2), (2 ** (p.k + 1), 2**p.k)))
    # k = rho*v, m = l + v*rho + v, n = rho*v + l  <=>  v = m - n divides k
    v = gap
    if p.k % v:
        return ClosedForm("c-equals-3-none", ())
    rho = p.k // v
    return ClosedForm("c-equals-3-power-of-two", ((2 ** (rho + 1), 2**rho),), {"rho": rho, "v": v})


def case6_exponents(p: EquationParams) -> tuple[int, int, int, int]:
    """``(L, e1, e2, e3)`` for Case 6 parameters in solver orientation m < n."""
    big_l = lcm(p.m, p.n - p.m)
    e1 = (big_l // p.m) * (p.n - p.m)
    e2 = big_l
    e3 = big_l + (big_l // p.m) * p.l
    return big_l, e1, e2, e3


def _case6(p: EquationParams) -> Optional[ClosedForm]:
    if p.m > p.l:
        return None
    _, e1, e2, e3 = case6_exponents(p)
    if e1 < e2:
        order = "order-e1-e2-e3"
    elif e1 == e2:
        order = "order-e1-equals-e2"
    elif e1 < e3:
        order = "order-e2-e1-e3"
    else:
        order = "order-e2-e3-e1"

    if p.c == 2:
        return ClosedForm(order, ((1, 1),))
    if e1 == e2 and p.c == 1 and e3 - e1 == 1:
        return ClosedForm(order, ((2, 4),))
    return ClosedForm(order, ())


def _case7(p: EquationParams) -> Optional[ClosedForm]:
    if p.c == 2:
        return ClosedForm("c-equals-2", ((1, 1),))
    if p.c == 1 and p.kl == p.n + 1:
        return ClosedForm("c-equals-1-adjacent", ((2, 2),))
    return ClosedForm("no-solution", ())


def _case8(p: EquationParams) -> Optional[ClosedForm]:
    if p.c == 1:
        return ClosedForm("c-equals-1", ())
    if p.c == 2:
        return ClosedForm("c-equals-2", ((1, 1),))
    if p.c == 4:
        return ClosedForm("c-equals-4", ((2, 2),) if p.n - p.kl == 1 else ())
    if p.n % 2 == 1 and is_prime(p.c):
        return ClosedForm("prime-coefficient-odd-degree", ())
    return None


_PREDICTORS: Dict[CaseId, Callable[[EquationParams], Optional[ClosedForm]]] = {
    CaseId.CASE2: _case2,
    CaseId.CASE3: _case3,
    CaseId.CASE4: _case4,
    CaseId.CASE5: _case5,
    CaseId.CASE6: _case6,
    CaseId.CASE7: _case7,
    CaseId.CASE8: _case8,
}


def predict(case_id: CaseId, canonical: EquationParams) -> Optional[ClosedForm]:
    """
    Closed-form answer for canonical parameters, if one is known.

    Args:
        case_id: Case of ``canonical``
        canonical: Parameters in solver orientation

    Returns:
        ClosedForm, or None when no special family covers the parameters
    """
    predictor = _PREDICTORS.get(case_id)
    return predictor(canonical) if predictor else None


def diagonal_coefficient(p: EquationParams, rho: int) -> int:
    """Coefficient for which (rho, rho) solves a Case 3 equation with p's exponents.

    Args:
        p: Case 3 parameters (k + l < n < m); ``p.c`` is ignored
        rho: Diagonal value, at least 1

    Returns:
        rho^(m-(k+l)) + rho^(n-(k+l))
    """
    if not p.kl < p.n < p.m:
        raise ValueError(f"Exponents {p.as_tuple()[:4]} do not satisfy k+l < n < m")
    if rho < 1:
        raise ValueError(f"rho must be ≥ 1, got {rho}")
    return rho ** (p.m - p.kl) + rho ** (p.n - p.kl)


def diagonal_coefficients(p: EquationParams, rho_max: int) -> list[tuple[int, int]]:
    """``[(rho, c)]`` for rho = 1..rho_max, see ``diagonal_coefficient``."""
    return [(rho, diagonal_coefficient(p, rho)) for rho in range(1, rho_max + 1)]
