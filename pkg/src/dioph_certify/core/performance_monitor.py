"""Performance monitoring utilities for dioph-certify.

Provides decorators and context managers for timing solver, oracle and sweep
operations. Messages go to the performance logger named in the solver
configuration; handlers are left to ``log_utils.configure_logging``.
"""

import functools
import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional

from dioph_certify.protocols import get_solver_config


def _perf_logger() -> logging.Logger:
    return logging.getLogger(get_solver_config().performance_logger_name)


@dataclass
class TimingRecord:
    """Elapsed time of one measured block, filled in when the block exits."""

    operation_name: str
    elapsed_ms: float = 0.0


@contextmanager
def timer(
    operation_name: str, threshold_ms: Optional[float] = None, log_args: bool = False, **kwargs
) -> Iterator[TimingRecord]:
    """Context manager for timing operations.

    Args:
        operation_name: Name of the operation being timed
        threshold_ms: Only log if the block takes at least this long; defaults to
            ``performance_threshold_ms`` from the configuration
        log_args: Whether to log kwargs in the message
        **kwargs: Additional context to include in log message

    Example:
        with timer("Oracle search", box=300) as record:
            pairs = brute_force(p, box)
        print(record.elapsed_ms)
    """
    if threshold_ms is None:
        threshold_ms = get_solver_config().performance_threshold_ms
    record = TimingRecord(operation_name)
    start = time.perf_counter()
    try:
        yield record
    finally:
        record.elapsed_ms = (time.perf_counter() - start) * 1000
        if record.elapsed_ms >= threshold_ms:
            msg = f"{operation_name}: {record.elapsed_ms:.2f}ms"
            if log_args and kwargs:
                args_str = ", ".join(f"{k}={v}" for k, v in kwargs.items())
                msg += f" ({args_str})"
            _perf_logger().debug(msg)


def timed(operation_name: Optional[str] = None, threshold_ms: Optional[float] = None):
    """Decorator for timing function calls.

    Args:
        operation_name: Name for the operation (defaults to the qualified function name)
        threshold_ms: Only log if the call takes at least this long

    Example:
        @timed("Case dispatch")
        def solve(p, bound=None):
            ...
    """

    def decorator(func: Callable) -> Callable:
        name = operation_name or f"{func.__module__}.{func.__qualname__}"

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            with timer(name, threshold_ms):
                return func(*args, **kwargs)

        return wrapper

    return decorator


class PerformanceMonitor:
    """Accumulates timing statistics for repeated operations.

    Example:
        monitor = PerformanceMonitor("Case5")
        for p in instances:
            with timer("solve") as elapsed:
                solve(p)
            monitor.record(elapsed.elapsed_ms)
        monitor.summary()
    """

    def __init__(self, operation_name: str):
        self.operation_name = operation_name
        self.timings: List[float] = []

    def record(self, elapsed_ms: float) -> None:
        """Add a timing measured elsewhere (e.g. in a worker process)."""
        self.timings.append(elapsed_ms)

    def summary(self) -> Dict[str, float]:
        """Count, total, mean, min and max in milliseconds (count 0 when empty)."""
        if not self.timings:
            return {"count": 0}
        total_ms = sum(self.timings)
        return {
            "count": len(self.timings),
            "total_ms": total_ms,
            "avg_ms": total_ms / len(self.timings),
            "min_ms": min(self.timings),
            "max_ms": max(self.timings),
        }

    def report(self) -> None:
        """Log summary statistics."""
        stats = self.summary()
        if not stats["count"]:
            _perf_logger().debug(f"{self.operation_name}: No measurements")
            return
        _perf_logger().debug(
            f"{self.operation_name} - "
            f"Count: {stats['count']}, "
            f"Total: {stats['total_ms']:.2f}ms, "
            f"Avg: {stats['avg_ms']:.2f}ms, "
            f"Min: {stats['min_ms']:.2f}ms, "
            f"Max: {stats['max_ms']:.2f}ms"
        )
