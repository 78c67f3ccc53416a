"""
Domain types for x^n + y^m = c * x^k * y^l.

Instead of passing bare tuples around, parameters, classifications, witnesses
and solution sets are frozen dataclasses. A SolutionSet's ``kind`` is the
discriminator that tells consumers how far its list can be trusted:

    EMPTY               no solutions at all (certified)
    FINITE              the listed pairs are every solution (certified)
    PARAMETRIC_DIAGONAL every (d, d) is a solution and nothing else is
    BOUNDED_INCOMPLETE  complete only among pairs with gcd(x, y) <= bound
"""

from __future__ import annotations

import dataclasses
import logging
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Optional

from dioph_certify.core.integer_core import gcd
from dioph_certify.solving.exceptions import InvalidParametersError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EquationParams:
    """The five defining integers of x^n + y^m = c * x^k * y^l."""

    n: int
    m: int
    k: int
    l: int  # noqa: E741
    c: int

    def __post_init__(self):
        for name in ("n", "m", "k", "l", "c"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidParametersError(
                    f"{name} must be an integer, got {type(value).__name__}"
                )
            if value < 1:
                raise InvalidParametersError(f"{name} must be ≥ 1")

    @property
    def kl(self) -> int:
        """k + l, the total degree of the right-hand monomial."""
        return self.k + self.l

    def mirrored(self) -> EquationParams:
        """Parameters after exchanging the roles of x and y."""
        return EquationParams(n=self.m, m=self.n, k=self.l, l=self.k, c=self.c)

    def holds(self, x: int, y: int) -> bool:
        """Exact evaluation of the equation at (x, y)."""
        return x**self.n + y**self.m == self.c * x**self.k * y**self.l

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return self.n, self.m, self.k, self.l, self.c

    def to_json_dict(self) -> dict[str, str]:
        return {name: str(value) for name, value in zip("nmklc", self.as_tuple())}


class CaseId(Enum):
    """The eight exponent orderings among n, m and k + l."""

    CASE1 = "Case1"  # n = m = k+l
    CASE2 = "Case2"  # n < m < k+l
    CASE3 = "Case3"  # k+l < n < m
    CASE4 = "Case4"  # n < k+l < m
    CASE5 = "Case5"  # n = k+l < m
    CASE6 = "Case6"  # canonical form m < n = k+l
    CASE7 = "Case7"  # m = n < k+l
    CASE8 = "Case8"  # k+l < m = n

    @property
    def number(self) -> int:
        return int(self.value[-1])

    @classmethod
    def from_number(cls, number: int) -> CaseId:
        return cls(f"Case{number}")


@dataclass(frozen=True)
class CaseClassification:
    """Outcome of classifying one parameter tuple.

    Attributes:
        case_id: Which of the eight cases applies
        swapped: Whether x and y were exchanged to reach ``canonical``
        hypothesis_met: False when the case's side condition fails
            (Case 2 or 4 with n > k, Case 6 with m > l)
        canonical: Parameters in the orientation the case solver expects
        original: Parameters as supplied
    """

    case_id: CaseId
    swapped: bool
    hypothesis_met: bool
    canonical: EquationParams
    original: EquationParams


WITNESS_SYMBOLS = frozenset(
    {"d", "x1", "y1", "r", "s", "R", "S", "R1", "S1", "M", "L", "e1", "e2", "e3", "rho", "v", "t"}
)


@dataclass(frozen=True)
class Witness:
    """Named positive-integer bindings that certify one solution."""

    bindings: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "bindings", MappingProxyType(dict(self.bindings)))
        unknown = set(self.bindings) - WITNESS_SYMBOLS
        if unknown:
            raise InvalidParametersError(f"Unknown witness symbols: {sorted(unknown)}")
        for name, value in self.bindings.items():
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise InvalidParametersError(f"Witness binding {name} must be a positive integer")
        x1, y1 = self.bindings.get("x1"), self.bindings.get("y1")
        if x1 is not None and y1 is not None and gcd(x1, y1) != 1:
            raise InvalidParametersError(f"Witness x1={x1} and y1={y1} are not coprime")

    def __hash__(self) -> int:
        return hash(frozenset(self.bindings.items()))

    def __reduce__(self):
        return Witness, (dict(self.bindings),)

    @classmethod
    def of(cls, **bindings: int) -> Witness:
        return cls(dict(bindings))

    def __getitem__(self, name: str) -> int:
        return self.bindings[name]

    def __contains__(self, name: object) -> bool:
        return name in self.bindings

    def __iter__(self) -> Iterator[str]:
        return iter(self.bindings)

    def get(self, name: str, default: Optional[int] = None) -> Optional[int]:
        return self.bindings.get(name, default)

    def replace(self, **changes: int) -> Witness:
        """Copy with some bindings changed."""
        return Witness({**self.bindings, **changes})

    def to_json_dict(self) -> dict[str, str]:
        return {name: str(value) for name, value in self.bindings.items()}


class SolutionKind(Enum):
    EMPTY = "empty"
    FINITE = "finite_certified"
    PARAMETRIC_DIAGONAL = "parametric_diagonal"
    BOUNDED_INCOMPLETE = "bounded_incomplete"

    @property
    def certified(self) -> bool:
        return self is not SolutionKind.BOUNDED_INCOMPLETE


@dataclass(frozen=True)
class Provenance:
    """Which rule produced a solution set, and which special clause matched."""

    rule: str
    clause: str = "characterization"

    def __str__(self) -> str:
        return f"{self.rule}:{self.clause}"


@dataclass(frozen=True)
class Solution:
    x: int
    y: int
    witness: Optional[Witness] = None

    @property
    def pair(self) -> tuple[int, int]:
        return self.x, self.y


@dataclass(frozen=True)
class SolutionSet:
    """A solution set with its completeness claim.

    Solutions are kept sorted lexicographically with duplicates removed; when
    two witnesses certify the same pair, the first one is kept.

    Attributes:
        kind: Completeness claim, see module docstring
        solutions: Concrete solutions (empty for EMPTY and PARAMETRIC_DIAGONAL)
        provenance: Producing rule and clause
        bound: gcd bound for BOUNDED_INCOMPLETE sets
        search_limit: Box side the set was searched in, when it came from a box search
    """

    kind: SolutionKind
    solutions: tuple[Solution, ...] = ()
    provenance: Provenance = Provenance("unknown")
    bound: Optional[int] = None
    search_limit: Optional[int] = None

    def __post_init__(self):
        unique: dict[tuple[int, int], Solution] = {}
        for solution in self.solutions:
            unique.setdefault(solution.pair, solution)
        object.__setattr__(self, "solutions", tuple(unique[pair] for pair in sorted(unique)))
        if self.kind is SolutionKind.BOUNDED_INCOMPLETE and self.bound is None:
            raise InvalidParametersError("bounded_incomplete solution sets need a bound")

    @classmethod
    def empty(cls, provenance: Provenance) -> SolutionSet:
        return cls(SolutionKind.EMPTY, (), provenance)

    @classmethod
    def finite(cls, solutions: Iterable[Solution], provenance: Provenance) -> SolutionSet:
        """Certified set; collapses to EMPTY when nothing was found."""
        solutions = tuple(solutions)
        kind = SolutionKind.FINITE if solutions else SolutionKind.EMPTY
        return cls(kind, solutions, provenance)

    @classmethod
    def diagonal(cls, provenance: Provenance) -> SolutionSet:
        return cls(SolutionKind.PARAMETRIC_DIAGONAL, (), provenance)

    @classmethod
    def bounded(
        cls,
        solutions: Iterable[Solution],
        bound: int,
        provenance: Provenance,
        search_limit: Optional[int] = None,
    ) -> SolutionSet:
        return cls(
            SolutionKind.BOUNDED_INCOMPLETE, tuple(solutions), provenance, bound, search_limit
        )

    def pairs(self) -> list[tuple[int, int]]:
        return [solution.pair for solution in self.solutions]

    def contains(self, x: int, y: int) -> bool:
        if self.kind is SolutionKind.PARAMETRIC_DIAGONAL:
            return x == y
        return any(solution.pair == (x, y) for solution in self.solutions)

    def pairs_in_box(self, x_max: int, y_max: int) -> list[tuple[int, int]]:
        """Members of the set inside [1, x_max] x [1, y_max]."""
        if self.kind is SolutionKind.PARAMETRIC_DIAGONAL:
            return [(d, d) for d in range(1, min(x_max, y_max) + 1)]
        return [(x, y) for x, y in self.pairs() if x <= x_max and y <= y_max]

    def with_solutions(self, solutions: Iterable[Solution]) -> SolutionSet:
        return dataclasses.replace(self, solutions=tuple(solutions))

