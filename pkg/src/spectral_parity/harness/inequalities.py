"""Instance checks for every inequality in the spectral-condition argument.

For a fixed (delta, n) with n >= 2*delta^2, eta* is the largest root of the
exact phi_Bstar and x0 = n - delta(delta-2) - 2. Rows per case:

    s >= delta+1     theta2 bound, sign of phi_B2 and g at eta*, the g(x0)
                     chain down to a closed bound in delta, rho(G2) < eta*
    s = delta        G2 coincides with G*
    1 <= s <= delta-1  sign of phi_B3, h and phi_B3' right of x0, the closed
                     bounds in (s, delta), rho(G3) < eta*

Exact quantities (identities at x0, closed forms, chains in n) are computed
in integers or Fractions; only eta*, theta2 and graph spectral radii are floats.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence

from spectral_parity.config.settings import Tolerances, load_settings
from spectral_parity.extremal.families import (
    PartitionSpec,
    below_theorem_range,
    build_case1,
    build_general,
    case1_spec,
    case3_spec,
    ensure_delta,
    extremal_spec,
    part_count,
    three_blocks,
)
from spectral_parity.extremal.polynomials import (
    comparison_point,
    eval_g,
    eval_h,
    eval_phiB3_prime,
    g_at_smax,
    g_at_smax_closed,
    g_at_x0_closed,
    g_axis,
    g_final_bound,
    h_at_x0_closed,
    h_axis,
    h_closed_n_axis,
    h_final_bound,
    phi_B2,
    phi_B3,
    phi_Bstar,
    phiB3_prime_at_x0_closed,
    phiB3_prime_axis,
    phiB3_prime_final_bound,
)
from spectral_parity.graphs.graph import Graph, delete_edges
from spectral_parity.harness.batch import CampaignRunner
from spectral_parity.harness.report import HarnessReport
from spectral_parity.spectra.cubic import CubicPoly, cubic_roots, largest_root
from spectral_parity.spectra.power import spectral_radius
from spectral_parity.spectra.quotient import characteristic_cubic, quotient

logger = logging.getLogger(__name__)

# Offsets right of x0 at which phi_B3' is sampled (eta* is sampled too).
DERIVATIVE_SAMPLES = (0.25, 0.5, 1.0, 2.0, 4.0, 8.0)


def case1_range(delta: int, n: int) -> range:
    """delta+1 .. floor((n-2)/(delta-1)); the boundary value is included."""
    return range(delta + 1, (n - 2) // (delta - 1) + 1)


def case3_range(delta: int) -> range:
    return range(1, delta)


def balanced_parts(total: int, count: int, floor: int = 1) -> tuple[int, ...]:
    """
    Most balanced split of total into count parts, each >= floor, descending.

    Example:
        >>> balanced_parts(14, 4)
        (4, 4, 3, 3)
    """
    if count < 1 or total < count * floor:
        raise ValueError(f"Cannot split {total} into {count} parts of size >= {floor}")
    base, extra = divmod(total, count)
    return (base + 1,) * extra + (base,) * (count - extra)


def _mismatches(closed: CubicPoly, assembled: CubicPoly) -> int:
    return sum(1 for a, b in zip(closed.coefficients, assembled.coefficients, strict=True) if a != b)


def _spanning_subgraph(G: Graph) -> Graph:
    """G minus the edge between the first and the last vertex (always present in a join)."""
    return delete_edges(G, [(0, G.order - 1)])


class ProofContext:
    """Shared per-(delta, n) quantities."""

    def __init__(self, delta: int, n: int, tolerances: Tolerances) -> None:
        self.delta = delta
        self.n = n
        self.tolerances = tolerances
        self.phi_star = phi_Bstar(delta, n)
        self.eta = largest_root(self.phi_star)
        self.x0 = comparison_point(delta, n)
        self.n_min = 2 * delta * delta

    def rho(self, G: Graph) -> float:
        return spectral_radius(G, tol=self.tolerances.spectral).value

    def report(self) -> HarnessReport:
        return HarnessReport(self.tolerances)


def _global_rows(ctx: ProofContext) -> HarnessReport:
    report = ctx.report()
    d, n = ctx.delta, ctx.n
    spec = extremal_spec(d, n)
    G_star = build_general(spec)
    decomposition = quotient(G_star, three_blocks(spec))

    report.add(
        "eq3.4-identity", _mismatches(ctx.phi_star, characteristic_cubic(decomposition)), 0,
        delta=d, n=n,
    )
    report.add("gstar-equitable", int(decomposition.equitable), 1, delta=d, n=n)
    report.add("gstar-rho-graph", ctx.rho(G_star), ctx.eta, delta=d, n=n)
    report.add("eq3.5", ctx.x0, ctx.eta, delta=d, n=n)
    return report


def _balanced_general(s: int, delta: int, n: int, floor: int) -> Graph:
    return build_general(PartitionSpec(s, balanced_parts(n - s, part_count(s, delta), floor)))


def _case1_rows(ctx: ProofContext, s: int) -> HarnessReport:
    report = ctx.report()
    d, n, x0, eta = ctx.delta, ctx.n, ctx.x0, ctx.eta
    keys = {"delta": d, "n": n, "s": s}

    poly = phi_B2(s, d, n)
    theta1, theta2, _ = cubic_roots(poly)
    spec = case1_spec(s, d, n)
    G2 = build_general(spec)
    decomposition = quotient(G2, three_blocks(spec))
    report.add("case1-charpoly", _mismatches(poly, characteristic_cubic(decomposition)), 0, **keys)
    report.add("case1-rho-graph", ctx.rho(G2), theta1, **keys)

    G1 = _balanced_general(s, d, n, floor=1)
    rho_g1 = ctx.rho(G1)
    report.add("eq3.1", ctx.rho(_spanning_subgraph(G1)), rho_g1, **keys)
    report.add("eq3.2", rho_g1, theta1, **keys)

    report.add("eq3.3", theta2, n - (d - 1) * s - 2, **keys)
    report.add("eq3.3-chain", n - (d - 1) * s - 2, n - d * d - 1, **keys)
    report.add("eq3.5-gap", theta2, eta, **keys)

    g_x0 = eval_g(s, d, n, x0)
    report.add(
        "eq3.6-identity", poly.evaluate(x0) - ctx.phi_star.evaluate(x0), (s - d) * g_x0, **keys
    )
    report.add("eq3.6", poly.evaluate(eta), 0, **keys)
    g_eta = eval_g(s, d, n, eta)
    report.add("eq3.7", g_eta, 0, **keys)
    report.add("eq3.7-axis", g_axis(s, d), x0, **keys)
    report.add("eq3.7-monotone", g_eta, g_x0, **keys)
    report.add("eq3.7-closed", g_at_x0_closed(s, d, n), g_x0, **keys)
    report.add("eq3.7-smax", g_x0, g_at_smax(d, n), **keys)
    report.add("case1-rho", theta1, eta, **keys)
    return report


def _case1_bound_rows(ctx: ProofContext) -> HarnessReport:
    """s-independent tail of the g(x0) chain."""
    report = ctx.report()
    d, n = ctx.delta, ctx.n
    report.add("eq3.7-smax-closed", g_at_smax(d, n), g_at_smax_closed(d, n), delta=d, n=n)
    report.add("eq3.7-nmin", g_at_smax_closed(d, n), g_at_smax_closed(d, ctx.n_min), delta=d, n=n)
    report.add("eq3.7-final", g_at_smax_closed(d, ctx.n_min), g_final_bound(d), delta=d, n=n)
    report.add("eq3.7-bound-positive", g_final_bound(d), 0, delta=d, n=n)
    return report


def _case2_rows(ctx: ProofContext) -> HarnessReport:
    report = ctx.report()
    d, n = ctx.delta, ctx.n
    report.add("case2", ctx.rho(build_case1(d, d, n)), ctx.eta, delta=d, n=n, s=d)
    report.add("case2-identity", _mismatches(phi_B2(d, d, n), ctx.phi_star), 0, delta=d, n=n, s=d)
    return report


def _case3_rows(ctx: ProofContext, s: int) -> HarnessReport:
    report = ctx.report()
    d, n, x0, eta = ctx.delta, ctx.n, ctx.x0, ctx.eta
    keys = {"delta": d, "n": n, "s": s}

    poly = phi_B3(s, d, n)
    theta1 = largest_root(poly)
    spec = case3_spec(s, d, n)
    G3 = build_general(spec)
    decomposition = quotient(G3, three_blocks(spec))
    report.add("case3-charpoly", _mismatches(poly, characteristic_cubic(decomposition)), 0, **keys)
    report.add("case3-rho-graph", ctx.rho(G3), theta1, **keys)
    report.add("eq3.8", ctx.rho(_balanced_general(s, d, n, floor=d + 1 - s)), theta1, **keys)

    h_x0 = eval_h(s, d, n, x0)
    report.add(
        "eq3.9-identity", poly.evaluate(x0) - ctx.phi_star.evaluate(x0), (d - s) * h_x0, **keys
    )
    h_eta = eval_h(s, d, n, eta)
    report.add("eq3.9", h_eta, 0, **keys)
    axis = h_axis(s, d, n)
    if axis is not None:
        report.add("eq3.9-axis", axis, x0, **keys)
    report.add("eq3.9-monotone", h_eta, h_x0, **keys)
    report.add("eq3.9-closed", h_at_x0_closed(s, d, n), h_x0, **keys)
    report.add("eq3.9-naxis", h_closed_n_axis(s, d), ctx.n_min, **keys)
    report.add("eq3.9-nmin", h_at_x0_closed(s, d, n), h_at_x0_closed(s, d, ctx.n_min), **keys)
    report.add("eq3.9-final", h_at_x0_closed(s, d, ctx.n_min), h_final_bound(s, d), **keys)
    report.add("eq3.9-bound-positive", h_final_bound(s, d), 0, **keys)
    report.add("eq3.10", poly.evaluate(eta), 0, **keys)

    for x in [x0 + offset for offset in DERIVATIVE_SAMPLES] + [eta]:
        report.add("eq3.11", eval_phiB3_prime(s, d, n, x), 0, witness=f"x={x:.12g}", **keys)
    prime_x0 = eval_phiB3_prime(s, d, n, x0)
    report.add("eq3.11-axis", phiB3_prime_axis(s, d, n), x0, **keys)
    report.add("eq3.11-derivative", prime_x0, poly.derivative(x0), **keys)
    report.add("eq3.11-closed", phiB3_prime_at_x0_closed(s, d, n), prime_x0, **keys)
    report.add(
        "eq3.11-nmin",
        phiB3_prime_at_x0_closed(s, d, n),
        phiB3_prime_at_x0_closed(s, d, ctx.n_min),
        **keys,
    )
    report.add(
        "eq3.11-final",
        phiB3_prime_at_x0_closed(s, d, ctx.n_min),
        phiB3_prime_final_bound(s),
        **keys,
    )
    report.add("case3-rho", theta1, eta, **keys)
    return report


def verify_proof_inequalities(
    delta: int,
    n: int,
    s_range: Iterable[int] | None = None,
    tolerances: Tolerances | None = None,
    max_workers: int = 1,
) -> HarnessReport:
    """
    Emit one row per inequality instance for (delta, n).

    Args:
        delta: Minimum degree (>= 3)
        n: Order (>= 2*delta^2)
        s_range: Values of s to check; s > delta runs Case 1, s = delta Case 2,
            s < delta Case 3 (default: every in-range s of all three cases)
        tolerances: Report tolerances (default: settings)
        max_workers: Values of s checked concurrently

    Returns:
        HarnessReport; every row is expected to pass

    Raises:
        ValueError: If delta < 3, n < 2*delta^2, or some s violates its case bounds
        RuntimeError: If a work unit failed

    Example:
        >>> report = verify_proof_inequalities(3, 18, s_range=[4])
        >>> report.all_passed
        True
    """
    ensure_delta(delta)
    if below_theorem_range(delta, n):
        raise ValueError(f"Proof inequalities need n >= 2*delta^2 = {2 * delta * delta}, got n={n}")
    tolerances = tolerances or load_settings().tolerances

    if s_range is None:
        values: Sequence[int] = [*case3_range(delta), delta, *case1_range(delta, n)]
    else:
        values = sorted(set(s_range))
    # Validate every s before any work starts
    for s in values:
        if s > delta:
            case1_spec(s, delta, n)
        elif s < delta:
            case3_spec(s, delta, n)

    logger.info(f"Verifying proof inequalities for delta={delta}, n={n}, s in {list(values)}")
    ctx = ProofContext(delta, n, tolerances)

    def work(s: int | None) -> HarnessReport:
        if s is None:
            return _global_rows(ctx)
        if s > delta:
            return _case1_rows(ctx, s)
        if s == delta:
            return _case2_rows(ctx)
        return _case3_rows(ctx, s)

    report = HarnessReport(tolerances)
    CampaignRunner(max_workers).run("proof inequalities", [None, *values], work, report)
    if any(s > delta for s in values):
        report.merge(_case1_bound_rows(ctx))

    logger.info(
        f"Proof inequalities (delta={delta}, n={n}): {len(report)} rows, "
        f"{report.failed_count} failed"
    )
    return report


def verify_proof_grid(
    points: Iterable[tuple[int, int]] | None = None,
    tolerances: Tolerances | None = None,
    max_workers: int = 1,
) -> HarnessReport:
    """verify_proof_inequalities over (delta, n) points (default: the settings grid)."""
    settings = load_settings()
    points = list(points) if points is not None else settings.grid.points()
    report = HarnessReport(tolerances or settings.tolerances)
    for delta, n in points:
        report.merge(
            verify_proof_inequalities(
                delta, n, tolerances=report.tolerances, max_workers=max_workers
            )
        )
    return report

