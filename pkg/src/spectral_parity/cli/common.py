"""Flags and output helpers shared by the command modules."""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from spectral_parity.config.settings import Tolerances, load_settings
from spectral_parity.database.report_store import ReportStore
from spectral_parity.graphs.graph import Graph
from spectral_parity.graphs.io import parse_graph
from spectral_parity.harness.report import HarnessReport

logger = logging.getLogger(__name__)

GREEN = "\033[32m"
RED = "\033[31m"
RESET = "\033[0m"


def positive_float(value: str) -> float:
    try:
        number = float(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"not a number: {value!r}") from e
    if not number > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {value}")
    return number


def nonnegative_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}") from e
    if number < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return number


def add_graph_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("graph", help="Graph file (edge list or graph6), '-' for stdin")
    parser.add_argument(
        "--format",
        choices=["edgelist", "graph6"],
        default=None,
        help="Input format (default: detect from the first byte)",
    )


def add_output_flag(parser: argparse.ArgumentParser, default: str = "text") -> None:
    parser.add_argument(
        "--output",
        choices=["json", "csv", "text"],
        default=default,
        help=f"Output format (default: {default})",
    )


def add_tolerance_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("tolerances")
    group.add_argument(
        "--strict-margin", type=positive_float, help="Gap required by strict inequalities"
    )
    group.add_argument("--slack", type=positive_float, help="Excess allowed by non-strict ones")
    group.add_argument("--equality-tol", type=positive_float, help="Tolerance of equality rows")
    group.add_argument("--tol", type=positive_float, help="Power-iteration residual tolerance")


def add_campaign_flags(parser: argparse.ArgumentParser) -> None:
    """--output, tolerance overrides, --workers, --store and --parquet."""
    add_output_flag(parser)
    add_tolerance_flags(parser)
    parser.add_argument(
        "--workers", type=int, default=1, help="Concurrent work units (default: 1)"
    )
    parser.add_argument("--store", type=Path, help="Also append the rows to this DuckDB store")
    parser.add_argument("--parquet", type=Path, help="Also write the rows to this Parquet file")


def read_graph(args: argparse.Namespace) -> Graph:
    """
    Read the graph named by args.graph.

    Raises:
        FileNotFoundError: If the file does not exist
        GraphParseError: On malformed input
    """
    if args.graph == "-":
        text = sys.stdin.read()
    else:
        path = Path(args.graph)
        if not path.is_file():
            raise FileNotFoundError(f"Graph file not found: {path}")
        text = path.read_text()
    G = parse_graph(text, args.format)
    logger.debug(f"Read graph from {args.graph}: n={G.order}, m={G.edge_count}")
    return G


def tolerances_from(args: argparse.Namespace) -> Tolerances:
    return load_settings().tolerances.with_overrides(
        strict_margin=args.strict_margin,
        slack=args.slack,
        equality=args.equality_tol,
        spectral=args.tol,
    )


def use_color(stream=None) -> bool:
    stream = stream or sys.stderr
    return "NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()


def status_line(report: HarnessReport) -> str:
    ok = report.all_passed
    text = (
        f"PASS: {len(report)} rows"
        if ok
        else f"FAIL: {report.failed_count} of {len(report)} rows failed"
    )
    if use_color():
        return f"{GREEN if ok else RED}{text}{RESET}"
    return text


def emit_report(report: HarnessReport, args: argparse.Namespace, campaign: str) -> int:
    """
    Print the report to stdout, persist it if asked, and pick the exit code.

    Returns:
        0 when every row passed and the self-audit is clean, else 1
    """
    sys.stdout.write(report.render(args.output))
    sys.stdout.flush()

    if args.parquet:
        report.write_parquet(args.parquet)
    if args.store:
        with ReportStore(args.store) as store:
            run_id = store.insert_report(report, campaign)
        print(f"stored as run {run_id}", file=sys.stderr)

    findings = report.audit()
    for finding in findings:
        logger.error(f"Report audit: {finding}")

    print(status_line(report), file=sys.stderr)
    return 0 if report.all_passed and not findings else 1
