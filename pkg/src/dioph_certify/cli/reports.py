"""
Per-instance reports and their two renderings.

JSON output writes every integer as a decimal string so that consumers with
fixed-width numbers never lose precision. The human rendering is a fixed-width
table.
"""

import logging
from dataclasses import dataclass
from typing import Any, Iterable, Optional, Sequence

from dioph_certify.core.performance_monitor import timer
from dioph_certify.oracle.brute_force import CrosscheckReport, SearchBox, crosscheck
from dioph_certify.solving.case_solvers import solve
from dioph_certify.solving.solution_types import (
    CaseClassification,
    EquationParams,
    Solution,
    SolutionKind,
    SolutionSet,
)

logger = logging.getLogger(__name__)


def solution_to_json(solution: Solution) -> dict[str, Any]:
    return {
        "x": str(solution.x),
        "y": str(solution.y),
        "witness": solution.witness.to_json_dict() if solution.witness else {},
    }


def pairs_to_json(pairs: Iterable[tuple[int, int]]) -> list[dict[str, str]]:
    return [{"x": str(x), "y": str(y)} for x, y in pairs]


@dataclass
class InstanceReport:
    """Everything known about one solved (and optionally cross-checked) instance."""

    params: EquationParams
    classification: CaseClassification
    solution_set: SolutionSet
    elapsed_ms: float
    crosscheck: Optional[CrosscheckReport] = None

    @property
    def certified(self) -> bool:
        return self.solution_set.kind.certified

    @property
    def discrepancies(self) -> int:
        return self.crosscheck.discrepancies if self.crosscheck else 0

    def to_json_dict(self) -> dict[str, Any]:
        s = self.solution_set
        record: dict[str, Any] = {
            "params": self.params.to_json_dict(),
            "case": self.classification.case_id.value,
            "swapped": self.classification.swapped,
            "hypothesis_met": self.classification.hypothesis_met,
            "kind": s.kind.value,
            "provenance": str(s.provenance),
            "bound": None if s.bound is None else str(s.bound),
            "search_limit": None if s.search_limit is None else str(s.search_limit),
            "solutions": [solution_to_json(solution) for solution in s.solutions],
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.crosscheck is not None:
            record["crosscheck"] = self.crosscheck.to_json_dict()
            record["discrepancies"] = {
                "soundness": str(len(self.crosscheck.soundness_failures)),
                "completeness": str(len(self.crosscheck.completeness_failures)),
            }
        return record


def build_instance_report(
    p: EquationParams, bound: int, box: int, check: bool = False
) -> InstanceReport:
    """
    Solve ``p`` and, when ``check`` is set, cross-check it on the square box.

    Args:
        p: Instance to solve
        bound: gcd bound for bounded results
        box: Side of the fallback and oracle boxes
        check: Whether to run the oracle comparison

    Returns:
        InstanceReport
    """
    with timer("instance", params=p.as_tuple()) as record:
        classification, solution_set = solve(p, bound=bound, box=box)
        report = crosscheck(p, SearchBox.square(box), solution_set) if check else None
    return InstanceReport(p, classification, solution_set, record.elapsed_ms, report)


def render_table(headers: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Left-aligned fixed-width table with a dashed rule under the header."""
    rows = [[str(cell) for cell in row] for row in rows]
    widths = [len(header) for header in headers]
    for row in rows:
        widths = [max(width, len(cell)) for width, cell in zip(widths, row)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows)
    return "\n".join(lines)


def _describe_witness(solution: Solution) -> str:
    if solution.witness is None:
        return "-"
    return " ".join(f"{name}={value}" for name, value in solution.witness.bindings.items())


def render_instance(report: InstanceReport) -> str:
    """Human-readable summary of an InstanceReport."""
    p = report.params
    s = report.solution_set
    c = report.classification
    header = [
        f"equation   x^{p.n} + y^{p.m} = {p.c}·x^{p.k}·y^{p.l}",
        f"case       {c.case_id.value} (swapped={c.swapped}, hypothesis_met={c.hypothesis_met})",
        f"kind       {s.kind.value}",
        f"provenance {s.provenance}",
    ]
    if s.bound is not None:
        header.append(f"bound      gcd(x, y) ≤ {s.bound}")
    if s.search_limit is not None:
        header.append(f"box        [1, {s.search_limit}]²")

    lines = list(header)
    if s.solutions:
        rows = [(sol.x, sol.y, _describe_witness(sol)) for sol in s.solutions]
        lines.extend(["", render_table(("x", "y", "witness"), rows)])
    elif s.kind is SolutionKind.PARAMETRIC_DIAGONAL:
        lines.extend(["", "solutions  (d, d) for every d ≥ 1"])
    else:
        lines.extend(["", "solutions  none"])

    if report.crosscheck is not None:
        cc = report.crosscheck
        lines.extend(
            [
                "",
                f"oracle     {cc.oracle_count} pairs in [1, {cc.box.x_max}]×[1, {cc.box.y_max}]",
                f"soundness failures     {cc.soundness_failures or 'none'}",
                f"completeness failures  {cc.completeness_failures or 'none'}",
            ]
        )
    return "\n".join(lines)
