"""Clique-partition comparison: moving vertices into the largest clique never lowers rho.

For K_s v (K_{n_1} u ... u K_{n_t}) with n_1 >= ... >= n_t >= p, the spectral
radius is at most that of K_s v (K_{n-s-p(t-1)} u (t-1)K_p), with equality
for the extremal partition itself.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator

from spectral_parity.config.settings import Lemma23Settings, Tolerances, load_settings
from spectral_parity.extremal.families import PartitionSpec, build_general
from spectral_parity.harness.batch import CampaignRunner
from spectral_parity.harness.report import HarnessReport
from spectral_parity.harness.rng import SplitMix64
from spectral_parity.spectra.power import spectral_radius

logger = logging.getLogger(__name__)


def _validate(s: int, p: int, t: int, n: int) -> None:
    if s < 1 or p < 1 or t < 1:
        raise ValueError(f"s, p and t must be >= 1, got s={s}, p={p}, t={t}")
    if n - s < p * t:
        raise ValueError(
            f"No partition of n - s = {n - s} into t={t} parts of size >= p={p} "
            f"(needs n >= s + p*t = {s + p * t})"
        )


def extremal_parts(s: int, p: int, t: int, n: int) -> tuple[int, ...]:
    """(n - s - p(t-1), p, ..., p)."""
    _validate(s, p, t, n)
    return (n - s - p * (t - 1),) + (p,) * (t - 1)


def partitions(total: int, count: int, floor: int) -> Iterator[tuple[int, ...]]:
    """
    Every descending partition of total into count parts >= floor, lexicographically descending.

    Example:
        >>> list(partitions(5, 2, 1))
        [(4, 1), (3, 2)]
    """

    def extend(remaining: int, slots: int, cap: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        high = min(cap, remaining - floor * (slots - 1))
        for first in range(high, floor - 1, -1):
            if first * slots < remaining:
                break
            for rest in extend(remaining - first, slots - 1, first):
                yield (first, *rest)

    yield from extend(total, count, total)


def random_partition(rng: SplitMix64, total: int, count: int, floor: int) -> tuple[int, ...]:
    """Start from count parts of size floor and hand out the surplus one unit at a time."""
    parts = [floor] * count
    for _ in range(total - floor * count):
        parts[rng.next_below(count)] += 1
    return tuple(sorted(parts, reverse=True))


def _witness(p: int, parts: tuple[int, ...]) -> str:
    """p, t and the parts; with the row's s, n and seed this reproduces the instance."""
    return f"p={p},t={len(parts)},parts=" + ",".join(str(size) for size in parts)


def verify_lemma23(
    s: int,
    p: int,
    t: int,
    n: int,
    trials: int | None = None,
    seed: int = 0,
    tolerances: Tolerances | None = None,
) -> HarnessReport:
    """
    Compare rho over clique partitions against the extremal partition.

    Args:
        s, p, t, n: Join size, part floor, part count, order
        trials: Random partitions to check (None: every partition)
        seed: SplitMix64 seed for sampled partitions
        tolerances: Report tolerances (default: settings)

    Returns:
        HarnessReport with one lemma2.3 row per partition, one
        lemma2.3-equality row, and lemma2.3-near rows for non-extremal
        partitions within the equality tolerance

    Raises:
        ValueError: If no valid partition exists for (s, p, t, n)

    Example:
        >>> verify_lemma23(2, 1, 3, 9).all_passed
        True
    """
    tolerances = tolerances or load_settings().tolerances
    extremal = extremal_parts(s, p, t, n)
    report = HarnessReport(tolerances)
    keys = {"n": n, "s": s, "seed": None if trials is None else seed}

    rho_extremal = spectral_radius(
        build_general(PartitionSpec(s, extremal)), tolerances.spectral
    ).value
    report.add(
        "lemma2.3-equality", rho_extremal, rho_extremal, witness=_witness(p, extremal), **keys
    )

    if trials is None:
        candidates = list(partitions(n - s, t, p))
    else:
        rng = SplitMix64(seed)
        candidates = [random_partition(rng, n - s, t, p) for _ in range(trials)]

    for parts in candidates:
        rho = spectral_radius(build_general(PartitionSpec(s, parts)), tolerances.spectral).value
        report.add("lemma2.3", rho, rho_extremal, witness=_witness(p, parts), **keys)
        if parts != extremal and abs(rho - rho_extremal) <= tolerances.equality:
            logger.warning(
                f"Non-extremal partition {parts} within equality tolerance (s={s}, n={n})"
            )
            report.add("lemma2.3-near", rho, rho_extremal, witness=_witness(p, parts), **keys)

    logger.debug(f"lemma2.3 (s={s}, p={p}, t={t}, n={n}): {len(candidates)} partitions checked")
    return report


def lemma23_campaign(
    instances: int,
    seed: int,
    bounds: Lemma23Settings | None = None,
    tolerances: Tolerances | None = None,
    max_workers: int = 1,
) -> HarnessReport:
    """
    One random partition for each of `instances` random (s, p, t, n).

    Parameters are drawn from the settings bounds with a SplitMix64 stream;
    every instance gets its own child seed, recorded in its rows.

    Raises:
        ValueError: If the bounds admit no instance
        RuntimeError: If an instance failed
    """
    settings = load_settings()
    bounds = bounds or settings.lemma23
    tolerances = tolerances or settings.tolerances
    if bounds.n_max < bounds.s_max + bounds.p_max * bounds.t_max:
        raise ValueError(
            f"lemma23 bounds admit no instance: n_max={bounds.n_max} < "
            f"s_max + p_max*t_max = {bounds.s_max + bounds.p_max * bounds.t_max}"
        )

    rng = SplitMix64(seed)
    draws = []
    for child_seed in rng.spawn(instances):
        child = SplitMix64(child_seed)
        s = 1 + child.next_below(bounds.s_max)
        p = 1 + child.next_below(bounds.p_max)
        t = bounds.t_min + child.next_below(bounds.t_max - bounds.t_min + 1)
        low = s + p * t
        n = low + child.next_below(bounds.n_max - low + 1)
        draws.append((s, p, t, n, child.next_u64()))

    logger.info(f"Starting clique-partition campaign: {instances} instances (seed={seed})")
    report = CampaignRunner(max_workers).run(
        "clique-partition campaign",
        draws,
        lambda draw: verify_lemma23(*draw[:4], trials=1, seed=draw[4], tolerances=tolerances),
        HarnessReport(tolerances),
    )
    logger.info(f"Clique-partition campaign: {len(report)} rows, {report.failed_count} failed")
    return report
