"""
Command-line entry point.

Subcommands:
    solve       classify and solve one instance
    brute       run the brute-force oracle on a box
    crosscheck  solve one instance and compare it with the oracle
    sweep       solve and cross-check a parameter grid into a JSONL report
    powereq     parametrize the solutions of x^a = y^b

Exit codes: 0 success, 1 verification discrepancy, 2 usage error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Sequence

from dioph_certify.cli.reports import (
    build_instance_report,
    pairs_to_json,
    render_instance,
    render_table,
)
from dioph_certify.cli.sweep import IntRange, SweepSpec, run_sweep
from dioph_certify.core.log_utils import configure_logging, get_current_log_file_path
from dioph_certify.core.power_equation import enumerate_solutions, parametrize
from dioph_certify.io.exceptions import ReportWriteError
from dioph_certify.io.report_writer import dumps_record
from dioph_certify.oracle.brute_force import SearchBox, brute_force
from dioph_certify.protocols import SolverConfig, get_solver_config
from dioph_certify.solving.exceptions import ConfigurationError, DiophError
from dioph_certify.solving.solution_types import CaseId, EquationParams

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_USAGE = 2

_INSTANCE_FLAGS = ("n", "m", "k", "l", "c")


def _range_arg(text: str) -> IntRange:
    try:
        return IntRange.parse(text)
    except DiophError as e:
        raise argparse.ArgumentTypeError(str(e))


def _case_arg(text: str) -> CaseId:
    number = text[4:] if text.lower().startswith("case") else text
    try:
        return CaseId.from_number(int(number))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a case number 1..8, got {text!r}")


def _add_instance_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("equation x^n + y^m = c·x^k·y^l")
    for name in _INSTANCE_FLAGS:
        help_text = "exponent ℓ of y on the right-hand side" if name == "l" else None
        group.add_argument(f"--{name}", type=int, required=True, help=help_text)


def _add_json_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="Print JSON instead of a table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dioph",
        description="Certified solver for x^n + y^m = c·x^k·y^l over positive integers.",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="More logging (-v info, -vv debug)"
    )
    parser.add_argument("--log-file", default=None, help="Also write log records to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="Classify and solve one instance")
    _add_instance_flags(solve)
    solve.add_argument("--bound", type=int, default=None, help="gcd bound for bounded results")
    solve.add_argument("--box", type=int, default=None, help="Fallback search box side")
    _add_json_flag(solve)

    brute = sub.add_parser("brute", help="Brute-force search in a box")
    _add_instance_flags(brute)
    brute.add_argument("--xmax", type=int, required=True)
    brute.add_argument("--ymax", type=int, required=True)
    brute.add_argument("--coprime", action="store_true", help="Only pairs with gcd(x, y) = 1")
    brute.add_argument("--gcdmax", type=int, default=None, help="Max gcd(x, y)")
    _add_json_flag(brute)

    check = sub.add_parser("crosscheck", help="Solve one instance and compare with brute force")
    _add_instance_flags(check)
    check.add_argument("--box", type=int, default=None, help="Oracle box side")
    check.add_argument("--bound", type=int, default=None, help="gcd bound for bounded results")
    _add_json_flag(check)

    sweep = sub.add_parser("sweep", help="Cross-check a parameter grid into a JSONL report")
    for name, default in zip(_INSTANCE_FLAGS, ("1:5", "1:5", "1:4", "1:4", "1:12")):
        sweep.add_argument(f"--{name}", type=_range_arg, default=IntRange.parse(default))
    sweep.add_argument("--box", type=int, default=None, help="Oracle box side")
    sweep.add_argument("--bound", type=int, default=None, help="gcd bound for bounded results")
    sweep.add_argument("--output", type=Path, required=True, help="JSONL report path")
    sweep.add_argument("--case", type=_case_arg, default=None, help="Only instances of this case")
    sweep.add_argument("--workers", type=int, default=None, help="Worker processes")
    _add_json_flag(sweep)

    powereq = sub.add_parser("powereq", help="Solutions of x^a = y^b")
    powereq.add_argument("--a", type=int, required=True)
    powereq.add_argument("--b", type=int, required=True)
    powereq.add_argument("--tmax", type=int, default=None, help="Family members to list")
    _add_json_flag(powereq)

    return parser


def _require_positive_flags(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    for name in ("n", "m", "k", "l", "c", "bound", "box", "xmax", "ymax", "gcdmax", "workers",
                 "a", "b", "tmax"):
        value = getattr(args, name, None)
        if isinstance(value, int) and value < 1:
            parser.error(f"{name} must be ≥ 1")


def _apply_defaults(args: argparse.Namespace, config: SolverConfig) -> None:
    """Fill unset flags from the configuration; flags always win."""
    defaults = {
        "bound": config.default_bound,
        "box": config.default_box,
        "tmax": config.default_tmax,
        "workers": config.default_workers,
    }
    for name, value in defaults.items():
        if hasattr(args, name) and getattr(args, name) is None:
            setattr(args, name, value)


def _params(args: argparse.Namespace) -> EquationParams:
    return EquationParams(args.n, args.m, args.k, args.l, args.c)


def _emit(payload: Dict[str, Any]) -> None:
    print(dumps_record(payload, indent=2))


def cmd_solve(args: argparse.Namespace) -> int:
    report = build_instance_report(_params(args), args.bound, args.box)
    if args.json:
        _emit(report.to_json_dict())
    else:
        print(render_instance(report))
    return EXIT_OK


def cmd_brute(args: argparse.Namespace) -> int:
    p = _params(args)
    box = SearchBox(args.xmax, args.ymax, coprime_only=args.coprime, gcd_max=args.gcdmax)
    pairs = brute_force(p, box)
    if args.json:
        _emit(
            {
                "params": p.to_json_dict(),
                "box": {
                    "x_max": str(box.x_max),
                    "y_max": str(box.y_max),
                    "coprime_only": box.coprime_only,
                    "gcd_max": None if box.gcd_max is None else str(box.gcd_max),
                },
                "solutions": pairs_to_json(pairs),
            }
        )
    else:
        print(f"{len(pairs)} solutions in [1, {box.x_max}]×[1, {box.y_max}]")
        if pairs:
            print(render_table(("x", "y"), pairs))
    return EXIT_OK


def cmd_crosscheck(args: argparse.Namespace) -> int:
    report = build_instance_report(_params(args), args.bound, args.box, check=True)
    if args.json:
        _emit(report.to_json_dict())
    else:
        print(render_instance(report))
    return EXIT_OK if report.discrepancies == 0 else EXIT_DISCREPANCY


def cmd_sweep(args: argparse.Namespace) -> int:
    spec = SweepSpec(
        n=args.n,
        m=args.m,
        k=args.k,
        l=args.l,
        c=args.c,
        box=args.box,
        bound=args.bound,
        output=args.output,
        case_filter=args.case,
        workers=args.workers,
    )
    try:
        summary = run_sweep(spec)
    except ReportWriteError as e:
        print(f"dioph sweep: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        _emit({"summary": summary.to_json_dict()})
    else:
        print(
            f"{summary.instances} instances ({summary.certified} certified, "
            f"{summary.bounded} bounded), {summary.discrepancies} discrepancies, "
            f"report written to {spec.output}"
        )
    return EXIT_OK if summary.ok else EXIT_DISCREPANCY


def cmd_powereq(args: argparse.Namespace) -> int:
    family = parametrize(args.a, args.b)
    members = enumerate_solutions(family, args.tmax)
    if args.json:
        _emit(
            {
                "a": str(family.a),
                "b": str(family.b),
                "d": str(family.d),
                "a1": str(family.a1),
                "b1": str(family.b1),
                "family": family.describe(),
                "solutions": pairs_to_json(members),
            }
        )
    else:
        print(f"x^{family.a} = y^{family.b}: d={family.d} a1={family.a1} b1={family.b1}")
        print(f"family {family.describe()}")
        print(render_table(("t", "x", "y"), [(t, x, y) for t, (x, y) in enumerate(members, 1)]))
    return EXIT_OK


_COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "solve": cmd_solve,
    "brute": cmd_brute,
    "crosscheck": cmd_crosscheck,
    "sweep": cmd_sweep,
    "powereq": cmd_powereq,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI; returns the exit code (argparse usage errors exit with 2)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    _require_positive_flags(parser, args)

    try:
        config = get_solver_config()
    except ConfigurationError as e:
        parser.error(str(e))
    _apply_defaults(args, config)

    level = {0: config.log_level, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    try:
        configure_logging(level, args.log_file or config.log_file)
    except (OSError, ValueError) as e:
        parser.error(f"cannot set up logging: {e}")
    log_path = get_current_log_file_path()
    if log_path is not None:
        logger.info(f"Logging to {log_path}")
    logger.debug(f"Running {args.command} with {vars(args)}")

    try:
        return _COMMANDS[args.command](args)
    except DiophError as e:
        print(f"dioph {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
