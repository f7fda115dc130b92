"""Main CLI entry point with argparse.

Entry point: spectral-parity (defined in pyproject.toml)

Exit codes:
    0: command ran and every assertion passed
    1: command ran and reported failed or discrepant rows (report still emitted)
    2: usage error, unparseable graph input, or size outside the supported budget
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence

from spectral_parity.__version__ import __version__
from spectral_parity.cli.campaign_commands import add_campaign_commands
from spectral_parity.cli.graph_commands import add_graph_commands
from spectral_parity.cli.history_commands import add_history_commands
from spectral_parity.exceptions import GraphParseError, SizeLimitError

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def main(argv: Sequence[str] | None = None) -> int:
    """
    Main CLI entry point.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Exit code (0=all passed, 1=failed rows, 2=usage/parse/size error)

    Commands:
        - rho, check, factor, extremal: single-graph operations
        - verify-theorem, verify-lemmas, scan, probe-sharpness: campaigns
        - history: stored campaign rows

    Example:
        $ spectral-parity rho k5.txt
        $ spectral-parity extremal --delta 3 --n 18 --emit phi
        $ spectral-parity verify-lemmas --delta 3 --n 18 --output csv
    """
    parser = argparse.ArgumentParser(
        prog="spectral-parity",
        description="Spectral conditions for strong parity factors - verification toolkit",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )

    parser.add_argument("--version", action="version", version=f"spectral-parity {__version__}")

    parser.add_argument(
        "--verbose",
        "-v",
        action="store_true",
        help="Enable verbose logging (DEBUG level)",
    )

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    add_graph_commands(subparsers)
    add_campaign_commands(subparsers)
    add_history_commands(subparsers)

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 0 for --help/--version and 2 for usage errors
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    # stdout carries data only
    log_level = logging.DEBUG if args.verbose else logging.INFO
    logging.basicConfig(
        level=log_level,
        format="%(asctime)s | %(levelname)-8s | %(name)s | %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        stream=sys.stderr,
    )

    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        return args.func(args)

    except (GraphParseError, SizeLimitError, ValueError, FileNotFoundError) as e:
        logging.error(f"{args.command}: {e}", exc_info=args.verbose)
        return EXIT_USAGE

    except Exception as e:
        logging.error(f"Command failed: {e}", exc_info=args.verbose)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
