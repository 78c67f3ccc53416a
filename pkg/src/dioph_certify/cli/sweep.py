"""
Grid sweeps.

A sweep solves and cross-checks every parameter tuple in a box of (n, m, k, l, c)
values and writes one JSONL line per instance, in grid order, followed by a
summary line. Instances can be spread over a process pool; results come back
through ``Executor.map`` in submission order, and only the parent process writes.
Workers start with the parent's current ``SolverConfig`` installed.
"""

import concurrent.futures
import itertools
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterator, Optional

from dioph_certify.cli.reports import build_instance_report
from dioph_certify.core.performance_monitor import PerformanceMonitor, timer
from dioph_certify.io.report_writer import JsonlReportWriter
from dioph_certify.protocols import SolverConfig, get_solver_config, set_solver_config
from dioph_certify.solving.classifier import classify
from dioph_certify.solving.exceptions import InvalidParametersError
from dioph_certify.solving.solution_types import CaseId, EquationParams, SolutionKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntRange:
    """Inclusive integer interval ``lo..hi``."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo < 1 or self.hi < 1:
            raise InvalidParametersError(f"range endpoints must be ≥ 1, got {self}")
        if self.lo > self.hi:
            raise InvalidParametersError(f"range lower bound exceeds upper bound: {self}")

    @classmethod
    def parse(cls, text: str) -> "IntRange":
        """Parse ``"lo:hi"`` or a single ``"v"``."""
        parts = text.split(":")
        if len(parts) not in (1, 2):
            raise InvalidParametersError(f"expected lo:hi, got {text!r}")
        try:
            values = [int(part) for part in parts]
        except ValueError as e:
            raise InvalidParametersError(f"expected lo:hi, got {text!r}") from e
        return cls(values[0], values[-1])

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __str__(self) -> str:
        return f"{self.lo}:{self.hi}"


@dataclass(frozen=True)
class SweepSpec:
    """A parameter grid plus the settings every instance is checked with.

    Attributes:
        n, m, k, l, c: Inclusive ranges for each parameter
        box: Oracle (and fallback) box side
        bound: gcd bound for bounded results
        output: JSONL report path
        case_filter: Keep only instances of this case
        workers: Process count; 1 runs in-process
    """

    n: IntRange
    m: IntRange
    k: IntRange
    l: IntRange  # noqa: E741
    c: IntRange
    box: int
    bound: int
    output: Path
    case_filter: Optional[CaseId] = None
    workers: int = 1

    def __post_init__(self):
        for name in ("box", "bound", "workers"):
            if getattr(self, name) < 1:
                raise InvalidParametersError(f"{name} must be ≥ 1")

    def instances(self) -> Iterator[EquationParams]:
        """Grid points in lexicographic (n, m, k, l, c) order, after the case filter."""
        for values in itertools.product(self.n, self.m, self.k, self.l, self.c):
            p = EquationParams(*values)
            if self.case_filter is None or classify(p).case_id is self.case_filter:
                yield p

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "n": str(self.n),
            "m": str(self.m),
            "k": str(self.k),
            "l": str(self.l),
            "c": str(self.c),
            "box": str(self.box),
            "bound": str(self.bound),
            "case": self.case_filter.value if self.case_filter else None,
        }


@dataclass
class SweepSummary:
    """Totals over a sweep, written as the final ``{"summary": ...}`` line."""

    instances: int = 0
    certified: int = 0
    bounded: int = 0
    certified_discrepancies: int = 0
    bounded_discrepancies: int = 0
    elapsed_ms: float = 0.0
    timings: Dict[str, Dict[str, float]] = field(default_factory=dict)

    @property
    def discrepancies(self) -> int:
        return self.certified_discrepancies + self.bounded_discrepancies

    @property
    def ok(self) -> bool:
        return self.discrepancies == 0

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "instances": str(self.instances),
            "certified": str(self.certified),
            "bounded": str(self.bounded),
            "certified_discrepancies": str(self.certified_discrepancies),
            "bounded_discrepancies": str(self.bounded_discrepancies),
            "elapsed_ms": round(self.elapsed_ms, 3),
            "timings_by_case": {
                case: {name: round(value, 3) for name, value in stats.items()}
                for case, stats in self.timings.items()
            },
        }


def _run_instance(job: tuple[EquationParams, int, int]) -> dict[str, Any]:
    p, bound, box = job
    return build_instance_report(p, bound, box, check=True).to_json_dict()


def _init_worker(config: SolverConfig) -> None:
    set_solver_config(config)


def _record_iter(spec: SweepSpec, jobs: list[tuple[EquationParams, int, int]]):
    if spec.workers == 1 or len(jobs) < 2:
        yield from map(_run_instance, jobs)
        return
    chunksize = max(1, len(jobs) // (spec.workers * 8))
    # spawned workers do not inherit the parent's installed config
    with concurrent.futures.ProcessPoolExecutor(
        max_workers=spec.workers, initializer=_init_worker, initargs=(get_solver_config(),)
    ) as pool:
        yield from pool.map(_run_instance, jobs, chunksize=chunksize)


def _tally(summary: SweepSummary, record: dict[str, Any]) -> None:
    discrepancies = sum(int(count) for count in record["discrepancies"].values())
    summary.instances += 1
    if record["kind"] == SolutionKind.BOUNDED_INCOMPLETE.value:
        summary.bounded += 1
        summary.bounded_discrepancies += discrepancies
    else:
        summary.certified += 1
        summary.certified_discrepancies += discrepancies
    if discrepancies:
        logger.warning(f"Discrepancy in {record['params']}: {record['discrepancies']}")


def run_sweep(spec: SweepSpec) -> SweepSummary:
    """
    Solve and cross-check every instance of ``spec``, writing the JSONL report.

    Args:
        spec: Grid and settings

    Returns:
        SweepSummary with discrepancy totals

    Raises:
        ReportWriteError: If the output file cannot be written
    """
    jobs = [(p, spec.bound, spec.box) for p in spec.instances()]
    logger.info(f"Sweeping {len(jobs)} instances with {spec.workers} worker(s)")
    summary = SweepSummary()
    monitors: Dict[str, PerformanceMonitor] = {}

    with JsonlReportWriter(spec.output) as writer:
        with timer("sweep") as elapsed:
            for record in _record_iter(spec, jobs):
                writer.write(record)
                _tally(summary, record)
                case = record["case"]
                monitors.setdefault(case, PerformanceMonitor(case)).record(record["elapsed_ms"])

        summary.elapsed_ms = elapsed.elapsed_ms
        summary.timings = {case: monitors[case].summary() for case in sorted(monitors)}
        for monitor in monitors.values():
            monitor.report()
        summary_record = summary.to_json_dict()
        summary_record["spec"] = spec.to_json_dict()
        writer.write({"summary": summary_record})

    logger.info(
        f"Sweep finished: {summary.instances} instances, {summary.discrepancies} discrepancies"
    )
    return summary
