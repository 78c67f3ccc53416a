"""Full-grid acceptance run: n, m in 1..5, k, l in 1..4, c in 1..12 against a 300 box.

Deselected by default; run with ``pytest -m slow``.
"""

import itertools

import pytest

from dioph_certify.oracle.brute_force import SearchBox, brute_force, crosscheck
from dioph_certify.solving.case_solvers import solve
from dioph_certify.solving.solution_types import EquationParams
from dioph_certify.solving.witness_validation import validate_solution_set

pytestmark = pytest.mark.slow

GRID = [
    EquationParams(*values)
    for values in itertools.product(
        range(1, 6), range(1, 6), range(1, 5), range(1, 5), range(1, 13)
    )
]


def test_grid_has_no_discrepancies():
    failures = []
    for p in GRID:
        classification, s = solve(p, bound=200, box=300)
        report = crosscheck(p, SearchBox.square(300), s)
        if not report.ok or not validate_solution_set(classification, s):
            failures.append(
                (p.as_tuple(), report.soundness_failures, report.completeness_failures)
            )
    assert failures == []
    assert len(GRID) == 4800


def test_grid_coprime_solutions():
    for p in GRID:
        found = brute_force(p, SearchBox.square(100, coprime_only=True))
        assert found == ([(1, 1)] if p.c == 2 else []), p
