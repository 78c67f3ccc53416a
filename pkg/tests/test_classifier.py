"""Tests for case classification and parameter types."""

import itertools
import pickle

import pytest

from dioph_certify.solving.classifier import classify, unswap_solutions
from dioph_certify.solving.exceptions import InvalidParametersError
from dioph_certify.solving.solution_types import (
    CaseId,
    EquationParams,
    Provenance,
    Solution,
    SolutionKind,
    SolutionSet,
    Witness,
)


@pytest.mark.parametrize(
    "params, case_id, swapped, hypothesis_met",
    [
        ((2, 2, 1, 1, 2), CaseId.CASE1, False, True),
        ((1, 2, 1, 2, 2), CaseId.CASE2, False, True),
        ((2, 3, 1, 3, 2), CaseId.CASE2, False, False),
        ((3, 4, 1, 1, 6), CaseId.CASE3, False, True),
        ((4, 3, 1, 1, 6), CaseId.CASE3, True, True),
        ((2, 6, 2, 2, 2), CaseId.CASE4, False, True),
        ((2, 5, 1, 2, 2), CaseId.CASE4, False, False),
        ((2, 3, 1, 1, 3), CaseId.CASE5, False, True),
        ((3, 2, 1, 1, 3), CaseId.CASE5, True, True),
        ((1, 2, 1, 1, 1), CaseId.CASE6, True, True),
        ((2, 1, 1, 1, 1), CaseId.CASE6, False, True),
        ((2, 3, 1, 2, 1), CaseId.CASE6, True, False),
        ((2, 2, 2, 1, 1), CaseId.CASE7, False, True),
        ((3, 3, 1, 1, 4), CaseId.CASE8, False, True),
    ],
)
def test_classify(params, case_id, swapped, hypothesis_met):
    c = classify(EquationParams(*params))
    assert c.case_id is case_id
    assert c.swapped is swapped
    assert c.hypothesis_met is hypothesis_met
    assert c.original.as_tuple() == params
    expected_canonical = EquationParams(*params).mirrored() if swapped else EquationParams(*params)
    assert c.canonical == expected_canonical


def test_canonical_orientation_per_case(small_grid):
    """Canonical parameters always satisfy the defining ordering of their case."""
    orderings = {
        CaseId.CASE1: lambda p: p.n == p.m == p.kl,
        CaseId.CASE2: lambda p: p.n < p.m < p.kl,
        CaseId.CASE3: lambda p: p.kl < p.n < p.m,
        CaseId.CASE4: lambda p: p.n < p.kl < p.m,
        CaseId.CASE5: lambda p: p.n == p.kl < p.m,
        CaseId.CASE6: lambda p: p.m < p.n == p.kl,
        CaseId.CASE7: lambda p: p.n == p.m < p.kl,
        CaseId.CASE8: lambda p: p.kl < p.n == p.m,
    }
    seen = set()
    for p in small_grid:
        c = classify(p)
        seen.add(c.case_id)
        assert orderings[c.case_id](c.canonical), p
        matching = [case for case, holds in orderings.items() if holds(c.canonical)]
        assert matching == [c.case_id]
    assert seen == set(CaseId)


def test_mirror_has_same_case(small_grid):
    for p in small_grid:
        a, b = classify(p), classify(p.mirrored())
        assert a.case_id is b.case_id
        assert a.hypothesis_met is b.hypothesis_met
        if p.n == p.m:
            # equal exponents: no swap, k and l stay as given
            assert not a.swapped and not b.swapped
            assert a.canonical == b.canonical.mirrored()
        else:
            assert a.canonical == b.canonical


def test_equal_exponents_keep_k_and_l():
    a, b = classify(EquationParams(1, 1, 1, 2, 1)), classify(EquationParams(1, 1, 2, 1, 1))
    assert a.case_id is b.case_id is CaseId.CASE7
    assert a.canonical.as_tuple() == (1, 1, 1, 2, 1)
    assert b.canonical.as_tuple() == (1, 1, 2, 1, 1)


def test_partition_on_exhaustive_grid():
    """Exactly one ordering holds for every n, m <= 6 and k, l <= 4."""
    orderings = [
        (CaseId.CASE1, lambda p: p.n == p.m == p.kl),
        (CaseId.CASE2, lambda p: p.n < p.m < p.kl),
        (CaseId.CASE3, lambda p: p.kl < p.n < p.m),
        (CaseId.CASE4, lambda p: p.n < p.kl < p.m),
        (CaseId.CASE5, lambda p: p.n == p.kl < p.m),
        (CaseId.CASE6, lambda p: p.m < p.n == p.kl),
        (CaseId.CASE7, lambda p: p.n == p.m < p.kl),
        (CaseId.CASE8, lambda p: p.kl < p.n == p.m),
    ]
    counts = dict.fromkeys(CaseId, 0)
    grid = itertools.product(range(1, 7), range(1, 7), range(1, 5), range(1, 5))
    for exponents in grid:
        p = EquationParams(*exponents, 1)
        c = classify(p)
        matching = [case for case, holds in orderings if holds(c.canonical)]
        assert matching == [c.case_id], p
        assert c.canonical == (p.mirrored() if c.swapped else p)
        counts[c.case_id] += 1
    assert sum(counts.values()) == 6 * 6 * 4 * 4
    assert all(counts.values())


def test_classify_rejects_non_params():
    with pytest.raises(InvalidParametersError):
        classify((2, 3, 1, 1, 3))


@pytest.mark.parametrize("field", ["n", "m", "k", "l", "c"])
def test_params_must_be_positive(field):
    values = dict(n=2, m=3, k=1, l=1, c=3)
    values[field] = 0
    with pytest.raises(InvalidParametersError, match=f"{field} must be ≥ 1"):
        EquationParams(**values)


def test_params_helpers():
    p = EquationParams(2, 3, 1, 1, 3)
    assert p.kl == 2
    assert p.holds(4, 2) and not p.holds(3, 3)
    assert p.mirrored() == EquationParams(3, 2, 1, 1, 3)
    assert p.to_json_dict() == {"n": "2", "m": "3", "k": "1", "l": "1", "c": "3"}


def test_unswap_mirrors_pairs_and_keeps_witnesses():
    witness = Witness.of(d=2, x1=2, y1=1, r=1)
    s = SolutionSet.finite([Solution(4, 2, witness), Solution(2, 2)], Provenance("case5"))
    mirrored = unswap_solutions(s, swapped=True)
    assert mirrored.pairs() == [(2, 2), (2, 4)]
    assert mirrored.solutions[1].witness == witness
    assert unswap_solutions(s, swapped=False) is s


def test_solution_set_normalizes():
    first = Solution(4, 2, Witness.of(d=2, x1=2, y1=1))
    duplicate = Solution(4, 2, Witness.of(d=1, x1=4, y1=3))
    s = SolutionSet.finite([first, Solution(2, 2), duplicate], Provenance("case5"))
    assert s.pairs() == [(2, 2), (4, 2)]
    assert s.solutions[1].witness is first.witness
    assert SolutionSet.finite([], Provenance("case5")).kind is SolutionKind.EMPTY
    with pytest.raises(InvalidParametersError):
        SolutionSet(SolutionKind.BOUNDED_INCOMPLETE, (), Provenance("case4"))


def test_witness_rejects_bad_bindings():
    with pytest.raises(InvalidParametersError, match="not coprime"):
        Witness.of(d=1, x1=2, y1=4)
    with pytest.raises(InvalidParametersError, match="Unknown witness symbols"):
        Witness.of(q=1)
    with pytest.raises(InvalidParametersError):
        Witness.of(d=0)


def test_witness_is_immutable_and_hashable():
    bindings = {"d": 2, "x1": 2, "y1": 1}
    witness = Witness(bindings)
    bindings["d"] = 5
    assert witness["d"] == 2
    with pytest.raises(TypeError):
        witness.bindings["d"] = 3
    assert witness == Witness.of(d=2, x1=2, y1=1)
    assert hash(witness) == hash(Witness.of(y1=1, x1=2, d=2))
    solutions = {Solution(4, 2, witness), Solution(4, 2, Witness.of(d=2, x1=2, y1=1))}
    assert len(solutions) == 1
    assert pickle.loads(pickle.dumps(witness)) == witness
