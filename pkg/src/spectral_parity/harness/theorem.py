"""Randomized check of the spectral condition for strong parity factors.

Every sample is a seeded random connected graph with minimum degree >= delta.
Samples whose spectral radius reaches rho(G*) and which are not G* itself
must pass the subset criterion; anything else is a counterexample row
carrying the graph6 serialization and the violating set.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from spectral_parity.config.settings import Tolerances, load_settings
from spectral_parity.exceptions import SizeLimitError
from spectral_parity.extremal.families import below_theorem_range, build_extremal, ensure_delta
from spectral_parity.extremal.polynomials import phi_Bstar
from spectral_parity.graphs.graph import Graph, complete, cycle, min_degree
from spectral_parity.graphs.io import format_graph6
from spectral_parity.harness.batch import CampaignRunner
from spectral_parity.harness.fingerprint import same_structure
from spectral_parity.harness.random_graphs import RandomGraphConfig, meets_hypotheses, random_graph
from spectral_parity.harness.report import HarnessReport, format_set
from spectral_parity.harness.rng import SplitMix64
from spectral_parity.parity.criterion import criterion_check
from spectral_parity.spectra.cubic import largest_root
from spectral_parity.spectra.power import spectral_radius

logger = logging.getLogger(__name__)

SAMPLE_CHECKS = ("thm1.1", "thm1.1-below", "thm1.1-extremal", "thm1.1-rejected")


def _sample(
    index: int,
    child_seed: int,
    delta: int,
    n: int,
    probability: float,
    threshold: float,
    extremal: Graph,
    tolerances: Tolerances,
) -> HarnessReport:
    report = HarnessReport(tolerances)
    keys = {"delta": delta, "n": n, "seed": child_seed}
    G = random_graph(RandomGraphConfig(n, delta, (probability,), child_seed))

    if not meets_hypotheses(G, delta):
        report.add("thm1.1-rejected", min_degree(G), delta, witness=format_graph6(G), **keys)
        return report

    rho = spectral_radius(G, tol=tolerances.spectral).value
    if rho < threshold - tolerances.slack:
        report.add("thm1.1-below", rho, threshold, witness=f"p={probability:g}", **keys)
        return report
    if same_structure(G, extremal):
        report.add("thm1.1-extremal", rho, threshold, witness=format_graph6(G), **keys)
        return report

    verdict = criterion_check(G)
    witness = None
    if not verdict.has_spf:
        witness = f"{format_graph6(G)};S={format_set(verdict.witness)}"
        logger.error(f"Counterexample at sample {index} (seed={child_seed}): {witness}")
    report.add("thm1.1", int(verdict.has_spf), 1, witness=witness, **keys)
    return report


def _summary_rows(report: HarnessReport, delta: int, n: int, samples: int, seed: int) -> None:
    rows = [row for row in report.rows if row["check_id"] in SAMPLE_CHECKS]
    if len(rows) != samples:
        raise RuntimeError(f"Theorem check recorded {len(rows)} samples, expected {samples}")
    hits = sum(1 for row in rows if row["check_id"] in ("thm1.1", "thm1.1-extremal"))
    counterexamples = sum(1 for row in rows if row["check_id"] == "thm1.1" and not row["passed"])
    keys = {"delta": delta, "n": n, "seed": seed}

    report.add(
        "thm1.1-hit-rate", hits, samples, witness=f"rate={hits / samples if samples else 0:.12g}",
        **keys,
    )
    report.add("thm1.1-counterexamples", counterexamples, 0, **keys)

    dense = criterion_check(complete(n))
    report.add("thm1.1-control-dense", int(dense.has_spf), 1, witness=f"rho={n - 1}", **keys)
    sparse = cycle(n)
    report.add(
        "thm1.1-control-sparse",
        min_degree(sparse),
        delta,
        witness=f"accepted={str(meets_hypotheses(sparse, delta)).lower()}",
        **keys,
    )
    logger.info(
        f"Theorem check (delta={delta}, n={n}): {hits}/{samples} samples reached rho(G*), "
        f"{counterexamples} counterexamples"
    )


def theorem_check(
    delta: int,
    n: int,
    samples: int,
    seed: int,
    edge_probabilities: Sequence[float] | None = None,
    tolerances: Tolerances | None = None,
    max_workers: int = 1,
) -> HarnessReport:
    """
    Sample random graphs and test the spectral condition on them.

    Sample i uses edge probability edge_probabilities[i % len] and the i-th
    child seed of SplitMix64(seed). Exactly one row per sample is emitted
    (thm1.1, thm1.1-below, thm1.1-extremal or thm1.1-rejected), followed by
    hit-rate, counterexample and control rows.

    Args:
        delta: Minimum degree (>= 3)
        n: Order (2*delta^2 <= n <= criterion budget)
        samples: Number of random graphs
        seed: Master seed
        edge_probabilities: Schedule (default: settings theorem.edge_probabilities)
        tolerances: Report tolerances (default: settings)
        max_workers: Samples evaluated concurrently

    Raises:
        ValueError: If delta < 3, n < 2*delta^2, or samples < 0
        SizeLimitError: If n exceeds the criterion budget
        RuntimeError: If sample generation failed (wraps GenerationError statistics)

    Example:
        >>> report = theorem_check(3, 18, samples=20, seed=42)
        >>> [r["lhs"] for r in report.rows if r["check_id"] == "thm1.1-counterexamples"]
        [0.0]
    """
    settings = load_settings()
    ensure_delta(delta)
    if below_theorem_range(delta, n):
        raise ValueError(f"Theorem check needs n >= 2*delta^2 = {2 * delta * delta}, got n={n}")
    if n > settings.limits.criterion_order:
        raise SizeLimitError("theorem check order n", settings.limits.criterion_order, n)
    if samples < 0:
        raise ValueError(f"samples must be >= 0, got {samples}")
    tolerances = tolerances or settings.tolerances
    schedule = tuple(edge_probabilities or settings.theorem.edge_probabilities)

    threshold = largest_root(phi_Bstar(delta, n))
    extremal = build_extremal(delta, n)
    child_seeds = SplitMix64(seed).spawn(samples)
    logger.info(
        f"Starting theorem check: delta={delta}, n={n}, {samples} samples, seed={seed}, "
        f"rho(G*)={threshold:.12g}"
    )

    report = CampaignRunner(max_workers).run(
        "theorem check",
        list(range(samples)),
        lambda i: _sample(
            i,
            child_seeds[i],
            delta,
            n,
            schedule[i % len(schedule)],
            threshold,
            extremal,
            tolerances,
        ),
        HarnessReport(tolerances),
    )
    _summary_rows(report, delta, n, samples, seed)
    return report
