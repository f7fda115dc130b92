"""Criterion-versus-oracle agreement scan over small connected graphs.

Labeled mode enumerates every edge subset on k vertices (k = 1..max_n) and
keeps the connected ones; stream mode takes graph6 lines from an external
enumerator. Each graph gets both decisions; disagreements become
scan-discrepancy rows, each order gets a scan-n{k} summary, and scan-total
closes the report.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterable, Iterator
from typing import Literal

from spectral_parity.config.settings import Limits, Tolerances, load_settings
from spectral_parity.exceptions import SizeLimitError
from spectral_parity.graphs.graph import Graph, count_components
from spectral_parity.graphs.io import format_graph6, read_graph6_stream
from spectral_parity.harness.batch import CampaignRunner
from spectral_parity.harness.report import HarnessReport
from spectral_parity.parity.criterion import criterion_check
from spectral_parity.parity.oracle import OracleStrategy, oracle_check

logger = logging.getLogger(__name__)

ScanMode = Literal["labeled", "stream"]


def labeled_graphs(order: int) -> Iterator[Graph]:
    """Every labeled graph on `order` vertices, edge subsets in ascending bitmask order."""
    pairs = [(u, v) for u in range(order) for v in range(u + 1, order)]
    for mask in range(1 << len(pairs)):
        rows = [0] * order
        for index, (u, v) in enumerate(pairs):
            if mask >> index & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph(order, tuple(rows))


def connected_labeled_graphs(order: int) -> Iterator[Graph]:
    for G in labeled_graphs(order):
        if count_components(G.adjacency, G.full_mask) == 1:
            yield G


class _OrderTally:
    def __init__(self) -> None:
        self.graphs = 0
        self.discrepancies = 0


def _compare(
    G: Graph, report: HarnessReport, tally: _OrderTally, strategy: OracleStrategy, limits: Limits
) -> None:
    if G.edge_count > limits.oracle_edges:
        report.add(
            "scan-skip", G.edge_count, limits.oracle_edges, n=G.order, witness=format_graph6(G)
        )
        return
    tally.graphs += 1
    by_criterion = criterion_check(G, max_order=limits.criterion_order)
    by_oracle = oracle_check(G, strategy=strategy, limits=limits)
    if by_criterion.has_spf != by_oracle.has_spf:
        tally.discrepancies += 1
        logger.warning(
            f"Discrepancy on {format_graph6(G)}: criterion={by_criterion.has_spf}, "
            f"oracle={by_oracle.has_spf}"
        )
        report.add(
            "scan-discrepancy",
            int(by_criterion.has_spf),
            int(by_oracle.has_spf),
            n=G.order,
            witness=format_graph6(G),
        )


def _summarize(report: HarnessReport, order: int, tally: _OrderTally) -> None:
    logger.info(f"n={order}: {tally.graphs} connected graphs, {tally.discrepancies} discrepancies")
    report.add(f"scan-n{order}", tally.discrepancies, 0, n=order, witness=f"graphs={tally.graphs}")


def _scan_order(
    order: int, tolerances: Tolerances, strategy: OracleStrategy, limits: Limits
) -> HarnessReport:
    report = HarnessReport(tolerances)
    tally = _OrderTally()
    for G in connected_labeled_graphs(order):
        _compare(G, report, tally, strategy, limits)
    _summarize(report, order, tally)
    return report


def _close(report: HarnessReport) -> HarnessReport:
    summaries = [row for row in report.rows if row["check_id"].startswith("scan-n")]
    total_graphs = sum(int(row["witness"].removeprefix("graphs=")) for row in summaries)
    total = sum(int(row["lhs"]) for row in summaries)
    report.add("scan-total", total, 0, witness=f"graphs={total_graphs}")
    logger.info(f"Scan completed: {total_graphs} graphs, {total} discrepancies")
    return report


def scan_small(
    max_n: int,
    mode: ScanMode = "labeled",
    lines: Iterable[str] | None = None,
    strategy: OracleStrategy = "profile",
    tolerances: Tolerances | None = None,
    limits: Limits | None = None,
    max_workers: int = 1,
) -> HarnessReport:
    """
    Compare the subset criterion with the definitional oracle.

    Args:
        max_n: Largest order (labeled mode: <= 6; stream mode: <= 12)
        mode: "labeled" (all labeled graphs) or "stream" (graph6 lines)
        lines: graph6 lines for stream mode
        strategy: Oracle strategy passed to oracle_check
        tolerances: Report tolerances (default: settings)
        limits: Size budgets (default: settings)
        max_workers: Orders scanned concurrently in labeled mode

    Returns:
        HarnessReport with scan-discrepancy, scan-skip, scan-n{k} and scan-total rows

    Raises:
        ValueError: If max_n < 1, on an unknown mode, or stream mode without lines
        SizeLimitError: If max_n (or a streamed graph) exceeds the mode's budget
        GraphParseError: On a malformed graph6 line, with its line number

    Example:
        >>> report = scan_small(4)
        >>> [r["witness"] for r in report.sorted_rows() if r["check_id"] == "scan-n4"]
        ['graphs=38']
    """
    settings = load_settings()
    limits = limits or settings.limits
    tolerances = tolerances or settings.tolerances
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")

    logger.info(f"Starting {mode} scan up to n={max_n} (oracle strategy: {strategy})")
    report = HarnessReport(tolerances)

    if mode == "labeled":
        if max_n > limits.labeled_scan_order:
            raise SizeLimitError(
                "labeled scan order",
                limits.labeled_scan_order,
                max_n,
                advice="feed non-isomorphic graph6 lines to stream mode instead",
            )
        runner = CampaignRunner(max_workers)
        return _close(
            runner.run(
                "labeled scan",
                list(range(1, max_n + 1)),
                lambda order: _scan_order(order, tolerances, strategy, limits),
                report,
            )
        )

    if mode != "stream":
        raise ValueError(f"Unknown scan mode: {mode!r}. Must be 'labeled' or 'stream'")
    if lines is None:
        raise ValueError("Stream mode needs graph6 lines")
    if max_n > limits.stream_scan_order:
        raise SizeLimitError("stream scan order", limits.stream_scan_order, max_n)

    tallies: dict[int, _OrderTally] = defaultdict(_OrderTally)
    for line_no, G in read_graph6_stream(lines):
        if G.order > max_n:
            raise SizeLimitError(f"order of graph on line {line_no}", max_n, G.order)
        if count_components(G.adjacency, G.full_mask) != 1:
            logger.debug(f"line {line_no}: disconnected, not scanned")
            continue
        _compare(G, report, tallies[G.order], strategy, limits)
    for order in sorted(tallies):
        _summarize(report, order, tallies[order])
    return _close(report)
