"""History command: rows and run summaries from a report store."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from spectral_parity.cli.common import add_output_flag
from spectral_parity.database.report_store import ReportStore
from spectral_parity.harness.report import CSV_COLUMNS, HarnessReport

logger = logging.getLogger(__name__)


def add_history_commands(subparsers) -> None:
    """
    Add history command to CLI parser.

    Args:
        subparsers: argparse subparsers object
    """
    history_parser = subparsers.add_parser("history", help="Show stored campaign rows")
    history_parser.add_argument("--store", type=Path, required=True, help="DuckDB report store")
    history_parser.add_argument("--run-id", help="Only rows of this run")
    history_parser.add_argument("--check-id", help="Only rows with this check id")
    history_parser.add_argument("--failed", action="store_true", help="Only failed rows")
    history_parser.add_argument(
        "--runs", action="store_true", help="List run summaries instead of rows"
    )
    add_output_flag(history_parser)
    history_parser.set_defaults(func=cmd_history)


def cmd_history(args: argparse.Namespace) -> int:
    """
    Print stored rows (or run summaries).

    Returns:
        0 when the printed rows all passed, else 1

    Raises:
        FileNotFoundError: If the store file does not exist
    """
    if not args.store.is_file():
        raise FileNotFoundError(f"Report store not found: {args.store}")

    with ReportStore(args.store) as store:
        if args.runs:
            for summary in store.run_summaries():
                sys.stdout.write(
                    f"{summary['run_id']}  {summary['campaign']}  "
                    f"{summary['total_rows']} rows  {summary['failed_rows']} failed  "
                    f"{summary['recorded_at']:%Y-%m-%d %H:%M:%S}\n"
                )
            return 0
        records = store.rows(run_id=args.run_id, check_id=args.check_id, failed_only=args.failed)

    # Stored passed flags are kept as recorded
    report = HarnessReport()
    report.extend({column: record[column] for column in CSV_COLUMNS} for record in records)
    logger.info(f"{len(records)} stored rows match")
    sys.stdout.write(report.render(args.output))
    return 0 if report.all_passed else 1
