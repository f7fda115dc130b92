"""Adjacency spectral radius by shifted power iteration.

Iterates on A + I from the all-ones vector, one connected component at a
time, and stops on the residual ||Ax - lambda*x||_inf rather than on
eigenvalue drift. The shift keeps bipartite components from oscillating.

See: docs/architecture/decisions/0001-bitset-graphs-numpy-spectra.md
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from spectral_parity.config.settings import load_settings
from spectral_parity.exceptions import ConvergenceError
from spectral_parity.graphs.graph import Graph, component_masks, members

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectralResult:
    """
    Spectral radius estimate with its certificate.

    Attributes:
        value: Rayleigh-quotient estimate of rho(G)
        residual: ||A x - value x||_inf for the final unit Perron iterate x
        iterations: Power steps taken, summed over components
    """

    value: float
    residual: float
    iterations: int


def _component_radius(
    matrix: np.ndarray, tol: float, max_iterations: int
) -> tuple[float, float, int]:
    size = matrix.shape[0]
    x = np.full(size, 1.0 / np.sqrt(size))
    best_value, best_residual = 0.0, np.inf

    for iteration in range(1, max_iterations + 1):
        y = matrix @ x
        value = float(x @ y)
        residual = float(np.max(np.abs(y - value * x)))
        if residual < best_residual:
            best_value, best_residual = value, residual
        if residual <= tol:
            return value, residual, iteration
        shifted = y + x
        x = shifted / np.linalg.norm(shifted)

    raise ConvergenceError(best_value, best_residual, max_iterations, tol)


def spectral_radius(
    G: Graph, tol: float | None = None, max_iterations: int | None = None
) -> SpectralResult:
    """
    Largest adjacency eigenvalue of G.

    Args:
        G: Graph of order >= 1
        tol: Residual tolerance (default: settings tolerances.spectral, 1e-10)
        max_iterations: Per-component iteration cap (default: 10^6)

    Returns:
        SpectralResult; edgeless graphs give value 0 after 0 iterations

    Raises:
        ValueError: If tol <= 0
        ConvergenceError: If a component misses the tolerance at the cap

    Example:
        >>> spectral_radius(complete(5)).value
        4.0
    """
    settings = load_settings()
    tol = settings.tolerances.spectral if tol is None else tol
    max_iterations = max_iterations or settings.limits.power_iterations
    if not tol > 0:
        raise ValueError(f"Spectral tolerance must be > 0, got {tol}")

    matrix = G.adjacency_matrix()
    best = SpectralResult(0.0, 0.0, 0)
    total_iterations = 0

    for component in component_masks(G.adjacency, G.full_mask):
        if component.bit_count() == 1:
            continue
        index = np.array(members(component))
        value, residual, iterations = _component_radius(
            matrix[np.ix_(index, index)], tol, max_iterations
        )
        total_iterations += iterations
        if value > best.value:
            best = SpectralResult(value, residual, 0)

    logger.debug(
        f"rho = {best.value:.12g} (residual {best.residual:.2e}, "
        f"{total_iterations} iterations, n={G.order})"
    )
    return SpectralResult(best.value, best.residual, total_iterations)
