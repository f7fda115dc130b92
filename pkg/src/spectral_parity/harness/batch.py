"""Parallel execution of independent campaign work units.

See: docs/architecture/decisions/0002-error-handling-strict-policy.md
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import TypeVar

from spectral_parity.harness.report import HarnessReport

logger = logging.getLogger(__name__)

T = TypeVar("T")


class CampaignRunner:
    """
    Runs one report-producing function per work unit and merges the reports.

    Workers finish in any order; HarnessReport sorts on output, so the merged
    report does not depend on scheduling.
    """

    def __init__(self, max_workers: int = 1) -> None:
        """
        Initialize runner.

        Args:
            max_workers: Concurrent threads (1 runs inline, in order)
        """
        if max_workers < 1:
            raise ValueError(f"max_workers must be >= 1, got {max_workers}")
        self.max_workers = max_workers

    def run(
        self,
        label: str,
        items: Sequence[T],
        work: Callable[[T], HarnessReport],
        report: HarnessReport,
    ) -> HarnessReport:
        """
        Apply work to every item and merge the partial reports into report.

        Raises:
            RuntimeError: If any work unit failed (ADR-0002: raise at end)
        """
        failed: list[tuple[T, str]] = []

        if self.max_workers == 1:
            for item in items:
                try:
                    report.merge(work(item))
                except Exception as e:
                    logger.error(f"{label} failed for {item!r}: {e}")
                    failed.append((item, str(e)))
        else:
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                future_to_item = {executor.submit(work, item): item for item in items}
                for future in as_completed(future_to_item):
                    item = future_to_item[future]
                    try:
                        report.merge(future.result())
                    except Exception as e:
                        # Log failure but continue collecting (ADR-0002: raise at end)
                        logger.error(f"{label} failed for {item!r}: {e}")
                        failed.append((item, str(e)))

        if failed:
            error_summary = "\n".join(f"  - {item!r}: {err}" for item, err in failed)
            raise RuntimeError(f"{label} failed for {len(failed)}/{len(items)} work units:\n{error_summary}")

        logger.debug(f"{label}: {len(items)} work units merged")
        return report
