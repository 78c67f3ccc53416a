"""Tests for the per-case solvers and the top-level dispatch."""

import pytest

from dioph_certify.oracle.brute_force import SearchBox, brute_force
from dioph_certify.solving.case_solvers import (
    CaseSolverService,
    solve,
    solve_case1,
    solve_case2,
    solve_case3,
    solve_case4,
    solve_case5,
    solve_case6,
    solve_case7,
    solve_case8,
    solve_coprime,
)
from dioph_certify.solving.classifier import classify
from dioph_certify.solving.exceptions import InvalidParametersError, PreconditionError
from dioph_certify.solving.solution_types import CaseId, EquationParams, SolutionKind

FINITE = SolutionKind.FINITE
EMPTY = SolutionKind.EMPTY

# (params, kind, exact pair list)
CERTIFIED_VECTORS = [
    ((2, 3, 1, 1, 3), FINITE, [(2, 2), (4, 2)]),
    ((3, 4, 1, 2, 3), FINITE, [(2, 2)]),
    ((3, 5, 2, 1, 3), FINITE, [(4, 2)]),
    ((2, 4, 1, 1, 3), EMPTY, []),
    ((2, 2, 2, 1, 1), FINITE, [(2, 2)]),
    ((2, 2, 2, 1, 2), FINITE, [(1, 1)]),
    ((2, 2, 3, 2, 1), EMPTY, []),
    ((3, 3, 1, 1, 4), FINITE, [(2, 2)]),
    ((3, 3, 1, 1, 7), EMPTY, []),
    ((3, 3, 1, 1, 2), FINITE, [(1, 1)]),
    ((3, 4, 1, 1, 1), EMPTY, []),
    ((3, 4, 1, 1, 2), FINITE, [(1, 1)]),
    ((3, 4, 1, 1, 3), EMPTY, []),
    ((3, 4, 1, 1, 4), EMPTY, []),
    ((3, 4, 1, 1, 5), EMPTY, []),
    ((1, 2, 1, 1, 1), FINITE, [(4, 2)]),
    ((2, 1, 1, 1, 1), FINITE, [(2, 4)]),
    ((2, 1, 1, 1, 2), FINITE, [(1, 1)]),
    ((3, 2, 1, 1, 3), FINITE, [(2, 2), (2, 4)]),
    ((1, 2, 1, 2, 2), FINITE, [(1, 1)]),
    ((1, 2, 1, 2, 3), EMPTY, []),
    ((2, 3, 2, 2, 7), EMPTY, []),
    ((2, 3, 2, 3, 4), EMPTY, []),
    ((2, 2, 1, 1, 3), EMPTY, []),
]


@pytest.mark.parametrize("params, kind, pairs", CERTIFIED_VECTORS)
def test_certified_vectors(params, kind, pairs):
    p = EquationParams(*params)
    classification, s = solve(p)
    assert s.kind is kind
    assert s.pairs() == pairs
    assert all(p.holds(x, y) for x, y in pairs)
    assert classification.hypothesis_met


def test_case3_diagonal_member():
    _, s = solve(EquationParams(3, 4, 1, 1, 6))
    assert s.kind is FINITE
    assert (2, 2) in s.pairs()


@pytest.mark.parametrize("exponents", [(2, 6, 2, 2), (2, 6, 3, 1)])
@pytest.mark.parametrize("c", range(1, 8))
def test_case4_fixed_tuples(exponents, c):
    _, s = solve(EquationParams(*exponents, c))
    if c == 2:
        assert s.kind is FINITE and s.pairs() == [(1, 1)]
    else:
        assert s.kind is EMPTY
    assert s.provenance.clause == "fixed-exponents"


@pytest.mark.parametrize("exponents", [(2, 2, 1, 1), (3, 3, 2, 1), (4, 4, 1, 3), (5, 5, 2, 3)])
def test_case1(exponents):
    n, m, k, l = exponents  # noqa: E741
    _, s = solve(EquationParams(n, m, k, l, 2))
    assert s.kind is SolutionKind.PARAMETRIC_DIAGONAL
    p = EquationParams(n, m, k, l, 2)
    assert all(p.holds(d, d) for d in range(1, 1001))
    for c in (1, 3, 4):
        _, s = solve(EquationParams(n, m, k, l, c))
        assert s.kind is EMPTY


def test_case1_has_no_off_diagonal_solutions():
    p = EquationParams(2, 2, 1, 1, 2)
    assert brute_force(p, SearchBox(60, 60)) == [(d, d) for d in range(1, 61)]


def test_case4_bounded_search():
    p = EquationParams(2, 5, 2, 1, 2)
    classification, s = solve(p, bound=50)
    assert classification.case_id is CaseId.CASE4
    assert s.kind is SolutionKind.BOUNDED_INCOMPLETE
    assert s.bound == 50
    assert (1, 1) in s.pairs()
    witness = s.solutions[0].witness
    assert witness.bindings == {"d": 1, "x1": 1, "y1": 1, "R": 1, "S": 1}


def test_case4_bounded_matches_oracle():
    """Every pair with gcd <= bound inside the box is found, and nothing else."""
    for c in range(1, 13):
        p = EquationParams(1, 4, 1, 1, c)
        _, s = solve(p, bound=30)
        oracle = brute_force(p, SearchBox(120, 120, gcd_max=30))
        assert s.pairs_in_box(120, 120) == oracle, c


def test_case5_family_witness_records_rho_and_v():
    _, s = solve(EquationParams(3, 5, 2, 1, 3))
    (solution,) = s.solutions
    assert solution.witness["rho"] == 1 and solution.witness["v"] == 2
    assert solution.witness["M"] == 2


def test_case5_c_equals_two_everywhere():
    for n, m, k, l in [(2, 3, 1, 1), (3, 5, 2, 1), (4, 6, 1, 3), (3, 4, 1, 2)]:  # noqa: E741
        _, s = solve(EquationParams(n, m, k, l, 2))
        assert s.pairs() == [(1, 1)]


def test_fallback_when_side_condition_fails():
    p = EquationParams(2, 3, 1, 3, 2)
    classification, s = solve(p, bound=20, box=40)
    assert not classification.hypothesis_met
    assert s.kind is SolutionKind.BOUNDED_INCOMPLETE
    assert s.provenance.rule == "fallback"
    assert (s.bound, s.search_limit) == (20, 40)
    assert s.pairs() == brute_force(p, SearchBox(40, 40, gcd_max=20))


def test_solve_uses_configured_bound(monkeypatch):
    monkeypatch.setenv("DIOPH_DEFAULT_BOUND", "7")
    _, s = solve(EquationParams(2, 5, 2, 1, 2))
    assert s.bound == 7


def test_solve_rejects_bad_bound():
    with pytest.raises(InvalidParametersError, match="bound must be ≥ 1"):
        solve(EquationParams(2, 3, 1, 1, 3), bound=0)


def test_swap_symmetry(small_grid):
    for p in small_grid:
        _, s = solve(p, bound=20, box=30)
        _, t = solve(p.mirrored(), bound=20, box=30)
        assert s.kind is t.kind
        assert s.pairs() == sorted((y, x) for x, y in t.pairs()), p


def test_solve_coprime():
    for exponents in [(1, 1, 1, 1), (2, 3, 1, 1), (5, 2, 4, 3)]:
        assert solve_coprime(EquationParams(*exponents, 2)).pairs() == [(1, 1)]
        assert solve_coprime(EquationParams(*exponents, 5)).kind is EMPTY
    assert solve_coprime(EquationParams(1, 1, 1, 1, 2)).solutions[0].witness["d"] == 1


@pytest.mark.parametrize(
    "solver, params",
    [
        (solve_case1, (2, 3, 1, 1, 2)),
        (solve_case2, (2, 3, 1, 3, 2)),
        (solve_case3, (2, 3, 1, 1, 2)),
        (lambda p: solve_case4(p, 10), (2, 5, 1, 2, 2)),
        (solve_case5, (3, 2, 1, 1, 3)),
        (solve_case6, (1, 2, 1, 1, 1)),
        (solve_case7, (2, 2, 1, 1, 2)),
        (solve_case8, (2, 2, 1, 1, 2)),
    ],
)
def test_solvers_check_preconditions(solver, params):
    with pytest.raises(PreconditionError):
        solver(EquationParams(*params))


def test_direct_solver_examples():
    assert solve_case6(EquationParams(2, 1, 1, 1, 1)).pairs() == [(2, 4)]
    assert solve_case6(EquationParams(3, 1, 2, 1, 1)).kind is EMPTY
    assert solve_case2(EquationParams(1, 2, 1, 2, 2)).pairs() == [(1, 1)]
    assert solve_case7(EquationParams(2, 2, 3, 2, 1)).kind is EMPTY


def test_dispatch_service_registers_every_case():
    service = CaseSolverService()
    assert set(service.get_registered_strategies()) == set(CaseId)
    assert service.has_strategy(CaseId.CASE6)
    s = service.dispatch(classify(EquationParams(2, 3, 1, 1, 3)), bound=10)
    assert s.pairs() == [(2, 2), (4, 2)]
