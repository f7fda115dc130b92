"""Campaign commands: verify-theorem, verify-lemmas, scan, probe-sharpness.

Every campaign prints a HarnessReport (--output text|csv|json) and exits 1
when a row failed or the report's self-audit found an inconsistency.
"""

from __future__ import annotations

import argparse
import logging
import sys

from spectral_parity.cli.common import (
    add_campaign_flags,
    emit_report,
    nonnegative_int,
    tolerances_from,
)
from spectral_parity.config.settings import load_settings
from spectral_parity.harness.inequalities import verify_proof_grid, verify_proof_inequalities
from spectral_parity.harness.lemma23 import lemma23_campaign, verify_lemma23
from spectral_parity.harness.scan import scan_small
from spectral_parity.harness.sharpness import sharpness_probe
from spectral_parity.harness.theorem import theorem_check

logger = logging.getLogger(__name__)


def parse_s_range(text: str) -> range:
    """
    Parse 'a..b' (inclusive) or a single integer.

    Raises:
        argparse.ArgumentTypeError: On malformed text or a > b
    """
    low, sep, high = text.partition("..")
    try:
        start = int(low)
        stop = int(high) if sep else start
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from e
    if start > stop:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(start, stop + 1)


def parse_lemma23_instance(text: str) -> tuple[int, int, int, int]:
    parts = text.split(",")
    try:
        values = tuple(int(part) for part in parts)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected s,p,t,n, got {text!r}") from e
    if len(values) != 4:
        raise argparse.ArgumentTypeError(f"expected four integers s,p,t,n, got {text!r}")
    return values


def add_campaign_commands(subparsers) -> None:
    """
    Add campaign commands to CLI parser.

    Args:
        subparsers: argparse subparsers object
    """
    theorem_parser = subparsers.add_parser(
        "verify-theorem", help="Randomized check of the spectral condition"
    )
    theorem_parser.add_argument("--delta", type=int, default=3, help="Minimum degree (default: 3)")
    theorem_parser.add_argument("--n", type=int, default=18, help="Order (default: 18)")
    theorem_parser.add_argument(
        "--samples", type=nonnegative_int, default=1000, help="Random graphs (default: 1000)"
    )
    theorem_parser.add_argument("--seed", type=nonnegative_int, default=0, help="Master seed")
    add_campaign_flags(theorem_parser)
    theorem_parser.set_defaults(func=cmd_verify_theorem)

    lemmas_parser = subparsers.add_parser(
        "verify-lemmas", help="Proof inequalities and the partition lemma"
    )
    lemmas_parser.add_argument("--delta", type=int, help="Minimum degree (>= 3)")
    lemmas_parser.add_argument("--n", type=int, help="Order (>= 2*delta^2)")
    lemmas_parser.add_argument(
        "--s-range", type=parse_s_range, help="Values of s as a..b (default: every case)"
    )
    lemmas_parser.add_argument(
        "--grid",
        action="store_true",
        help="Run the configured (delta, n) grid instead of one point",
    )
    lemmas_parser.add_argument(
        "--lemma23",
        type=parse_lemma23_instance,
        action="append",
        default=[],
        metavar="S,P,T,N",
        help="Exhaustive partition sweep for one instance (repeatable)",
    )
    lemmas_parser.add_argument(
        "--lemma23-random",
        type=nonnegative_int,
        default=0,
        metavar="K",
        help="K random partition-lemma instances (default: 0)",
    )
    lemmas_parser.add_argument("--seed", type=nonnegative_int, default=0, help="Seed for K")
    add_campaign_flags(lemmas_parser)
    lemmas_parser.set_defaults(func=cmd_verify_lemmas)

    scan_parser = subparsers.add_parser(
        "scan", help="Compare the subset criterion with the oracle on small graphs"
    )
    scan_parser.add_argument("--max-n", type=int, required=True, help="Largest order")
    scan_parser.add_argument(
        "--stream",
        action="store_true",
        help="Read graph6 lines from stdin instead of enumerating labeled graphs",
    )
    scan_parser.add_argument(
        "--strategy",
        choices=["profile", "search"],
        default="profile",
        help="Oracle strategy (default: profile)",
    )
    add_campaign_flags(scan_parser)
    scan_parser.set_defaults(func=cmd_scan)

    sharpness_parser = subparsers.add_parser(
        "probe-sharpness", help="Record the criterion verdict on G*(delta, n)"
    )
    sharpness_parser.add_argument("--delta", type=int, default=3, help="Minimum degree")
    sharpness_parser.add_argument("--n", type=int, default=18, help="Order")
    add_campaign_flags(sharpness_parser)
    sharpness_parser.set_defaults(func=cmd_probe_sharpness)


def cmd_verify_theorem(args: argparse.Namespace) -> int:
    report = theorem_check(
        args.delta,
        args.n,
        args.samples,
        args.seed,
        tolerances=tolerances_from(args),
        max_workers=args.workers,
    )
    return emit_report(report, args, "verify-theorem")


def cmd_verify_lemmas(args: argparse.Namespace) -> int:
    """
    Proof inequalities at one point (or the grid), plus optional partition-lemma rows.

    Raises:
        ValueError: If neither --grid nor both --delta and --n are given
    """
    tolerances = tolerances_from(args)
    if args.grid:
        if args.s_range is not None:
            raise ValueError("--s-range applies to a single (--delta, --n) point, not --grid")
        report = verify_proof_grid(tolerances=tolerances, max_workers=args.workers)
    else:
        if args.delta is None or args.n is None:
            raise ValueError("verify-lemmas needs --delta and --n (or --grid)")
        report = verify_proof_inequalities(
            args.delta,
            args.n,
            s_range=args.s_range,
            tolerances=tolerances,
            max_workers=args.workers,
        )

    for s, p, t, n in args.lemma23:
        report.merge(verify_lemma23(s, p, t, n, tolerances=tolerances))
    if args.lemma23_random:
        report.merge(
            lemma23_campaign(
                args.lemma23_random,
                args.seed,
                bounds=load_settings().lemma23,
                tolerances=tolerances,
                max_workers=args.workers,
            )
        )
    return emit_report(report, args, "verify-lemmas")


def cmd_scan(args: argparse.Namespace) -> int:
    if args.stream:
        report = scan_small(
            args.max_n,
            mode="stream",
            lines=sys.stdin,
            strategy=args.strategy,
            tolerances=tolerances_from(args),
        )
    else:
        report = scan_small(
            args.max_n,
            strategy=args.strategy,
            tolerances=tolerances_from(args),
            max_workers=args.workers,
        )
    return emit_report(report, args, "scan")


def cmd_probe_sharpness(args: argparse.Namespace) -> int:
    report = sharpness_probe(args.delta, args.n, tolerances=tolerances_from(args))
    return emit_report(report, args, "probe-sharpness")
