"""Sharpness probe on the extremal graph G*.

Records, without asserting, whether the subset criterion finds a violating
set on G*(delta, n), the margin-maximizing set, and criterion/oracle verdicts
on smaller members of the same family shape. Every row is informational.
"""

from __future__ import annotations

import logging

from spectral_parity.config.settings import Limits, Tolerances, load_settings
from spectral_parity.extremal.families import below_theorem_range, build_extremal, ensure_extremal
from spectral_parity.harness.report import HarnessReport, format_set
from spectral_parity.parity.criterion import criterion_check, max_violation_margin
from spectral_parity.parity.oracle import oracle_check

logger = logging.getLogger(__name__)


def family_orders(delta: int, n: int, limits: Limits) -> list[int]:
    """Orders n' <= min(n, oracle order) of G*(delta, n') that fit the oracle edge budget."""
    orders = []
    for order in range(delta * (delta - 1) + 2, min(n, limits.oracle_order) + 1):
        if build_extremal(delta, order).edge_count <= limits.oracle_edges:
            orders.append(order)
    return orders


def _range_tag(delta: int, n: int) -> str:
    return "below-range" if below_theorem_range(delta, n) else "in-range"


def sharpness_probe(
    delta: int,
    n: int,
    tolerances: Tolerances | None = None,
    limits: Limits | None = None,
) -> HarnessReport:
    """
    Probe whether G*(delta, n) is a genuine exception to the spectral condition.

    Rows:
        sharpness-criterion: has_spf of G* by the criterion (lhs) vs 0, the
            verdict the exception clause would suggest
        sharpness-margin: max violation margin (lhs) vs 1, with the maximizing S
        sharpness-flag: 1 when the criterion verdict contradicts the exception
        sharpness-family-criterion / -oracle / -consistency: per family order
            n' that the oracle can handle

    Raises:
        ValueError: If delta < 3 or n < delta(delta-1)+2
        SizeLimitError: If n exceeds the criterion budget
    """
    settings = load_settings()
    tolerances = tolerances or settings.tolerances
    limits = limits or settings.limits
    ensure_extremal(delta, n)
    logger.info(f"Starting sharpness probe on G*(delta={delta}, n={n})")

    report = HarnessReport(tolerances)
    keys = {"delta": delta, "n": n, "s": delta}
    G = build_extremal(delta, n)

    verdict = criterion_check(G, max_order=limits.criterion_order)
    witness = _range_tag(delta, n)
    if verdict.witness is not None:
        witness = f"{witness};S={format_set(verdict.witness)}"
    report.add("sharpness-criterion", int(verdict.has_spf), 0, witness=witness, **keys)

    mask, detail, margin = max_violation_margin(G, max_order=limits.criterion_order)
    report.add(
        "sharpness-margin",
        margin,
        1,
        witness=(
            f"S={format_set(mask)};components={detail['components']};"
            f"degree_sum={detail['degree_sum']};size={detail['size']}"
        ),
        **keys,
    )
    report.add(
        "sharpness-flag",
        int(verdict.has_spf),
        0,
        witness="contradicts-exception" if verdict.has_spf else "consistent",
        **keys,
    )
    if verdict.has_spf:
        logger.warning(
            f"G*(delta={delta}, n={n}) satisfies the criterion (max margin {margin} at "
            f"S={format_set(mask)}); the exception clause is not sharp here"
        )

    orders = family_orders(delta, n, limits)
    if not orders:
        logger.info(f"No family order for delta={delta} fits the oracle budget")
    for order in orders:
        member = build_extremal(delta, order)
        by_criterion = criterion_check(member, max_order=limits.criterion_order)
        by_oracle = oracle_check(member, limits=limits)
        family_keys = {"delta": delta, "n": order, "s": delta}
        tag = _range_tag(delta, order)
        report.add(
            "sharpness-family-criterion", int(by_criterion.has_spf), 0, witness=tag, **family_keys
        )
        report.add("sharpness-family-oracle", int(by_oracle.has_spf), 0, witness=tag, **family_keys)
        report.add(
            "sharpness-consistency",
            int(by_criterion.has_spf),
            int(by_oracle.has_spf),
            witness="agree" if by_criterion.has_spf == by_oracle.has_spf else "disagree",
            **family_keys,
        )

    logger.info(f"Sharpness probe (delta={delta}, n={n}): {len(report)} rows recorded")
    return report
