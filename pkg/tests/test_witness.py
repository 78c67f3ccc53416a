"""Tests for witness re-validation."""

import pytest

from dioph_certify.solving.case_solvers import solve
from dioph_certify.solving.exceptions import InvalidParametersError
from dioph_certify.solving.solution_types import CaseId, EquationParams, Witness
from dioph_certify.solving.witness_validation import validate_solution_set, validate_witness


def _canonical_solutions(p, bound=20, box=30):
    """(canonical params, case or None, x, y, witness) for every solution of ``p``."""
    classification, s = solve(p, bound=bound, box=box)
    case_id = None if s.provenance.rule in ("fallback", "coprime") else classification.case_id
    for solution in s.solutions:
        x, y = (solution.y, solution.x) if classification.swapped else solution.pair
        yield classification.canonical, case_id, x, y, solution.witness


def test_case5_example_witness():
    p = EquationParams(2, 3, 1, 1, 3)
    w = Witness.of(x1=2, y1=1, r=1, d=2)
    assert validate_witness(p, 4, 2, w, CaseId.CASE5)
    assert not validate_witness(p, 4, 2, w.replace(r=2), CaseId.CASE5)


def test_case8_example_witness():
    p = EquationParams(3, 3, 1, 1, 4)
    w = Witness.of(x1=1, y1=1, r=2, d=2)
    assert validate_witness(p, 2, 2, w, CaseId.CASE8)


def test_wrong_pair_is_rejected():
    p = EquationParams(3, 3, 1, 1, 4)
    w = Witness.of(x1=1, y1=1, r=2, d=2)
    assert not validate_witness(p, 2, 4, w, CaseId.CASE8)
    assert not validate_witness(p, 2, 2, Witness.of(d=2, x1=1), CaseId.CASE8)


def test_case_free_validation_checks_equation_only():
    p = EquationParams(2, 3, 1, 3, 2)
    assert validate_witness(p, 1, 1, Witness.of(d=1, x1=1, y1=1), None)
    assert not validate_witness(p, 2, 2, Witness.of(d=2, x1=1, y1=1), None)


def test_case5_family_bindings_are_checked():
    p = EquationParams(3, 5, 2, 1, 3)
    w = Witness.of(x1=2, y1=1, r=1, d=2, M=2, rho=1, v=2)
    assert validate_witness(p, 4, 2, w, CaseId.CASE5)
    assert not validate_witness(p, 4, 2, Witness.of(x1=2, y1=1, r=1, d=2, M=2, rho=1), CaseId.CASE5)


def test_emitted_witnesses_validate(small_grid):
    checked = 0
    for p in small_grid:
        classification, s = solve(p, bound=20, box=30)
        assert validate_solution_set(classification, s), p
        checked += len(s.solutions)
    assert checked > 0


@pytest.mark.parametrize(
    "params",
    [
        (2, 3, 1, 1, 3),
        (3, 5, 2, 1, 3),
        (3, 4, 1, 1, 6),
        (3, 3, 1, 1, 4),
        (2, 2, 2, 1, 1),
        (1, 2, 1, 1, 1),
        (1, 2, 1, 2, 2),
        (2, 6, 2, 2, 2),
        (2, 5, 2, 1, 2),
        (2, 3, 1, 3, 2),
    ],
)
def test_single_binding_perturbation_is_rejected(params):
    """Moving any one binding by ±1 invalidates the witness."""
    solutions = list(_canonical_solutions(EquationParams(*params)))
    assert solutions
    for canonical, case_id, x, y, witness in solutions:
        assert validate_witness(canonical, x, y, witness, case_id)
        for name in witness:
            for delta in (-1, 1):
                try:
                    tampered = witness.replace(**{name: witness[name] + delta})
                except InvalidParametersError:
                    continue
                assert not validate_witness(canonical, x, y, tampered, case_id), (name, delta)
