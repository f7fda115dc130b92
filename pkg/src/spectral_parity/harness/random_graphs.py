"""Seeded random connected graphs with a minimum-degree floor.

Construction per attempt (all randomness from one SplitMix64 stream):
    1. random spanning tree: shuffle the vertices, attach each to a uniformly
       chosen earlier one
    2. every non-tree pair (u < v, lexicographic) independently with
       probability p, p = edge_probabilities[attempt % len(schedule)]
    3. greedy augmentation: each vertex below delta, in ascending order, gains
       uniformly chosen absent edges until it reaches delta
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from spectral_parity.config.settings import load_settings
from spectral_parity.exceptions import GenerationError
from spectral_parity.graphs.graph import MAX_ORDER, Graph, is_connected, min_degree
from spectral_parity.harness.rng import SplitMix64

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RandomGraphConfig:
    """
    Generator parameters.

    Attributes:
        n: Order (<= 63)
        delta: Minimum-degree target (< n)
        edge_probabilities: Schedule, one entry per attempt (cycled)
        seed: 64-bit seed
        require_connected: Skip the spanning tree when False
        max_attempts: Rejection budget (default: settings theorem.max_attempts)
    """

    n: int
    delta: int
    edge_probabilities: tuple[float, ...] = (0.5,)
    seed: int = 0
    require_connected: bool = True
    max_attempts: int | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise ValueError(f"n must be in 1..{MAX_ORDER}, got {self.n}")
        if self.delta < 0:
            raise ValueError(f"delta must be >= 0, got {self.delta}")
        if self.delta >= self.n:
            raise ValueError(
                f"Minimum degree {self.delta} is impossible on {self.n} vertices (needs delta < n)"
            )
        if not self.edge_probabilities:
            raise ValueError("edge_probabilities must not be empty")
        for p in self.edge_probabilities:
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"Edge probability must be in [0, 1], got {p}")


def meets_hypotheses(G: Graph, delta: int) -> bool:
    """Connected with minimum degree >= delta."""
    return is_connected(G) and min_degree(G) >= delta


def _attempt(config: RandomGraphConfig, rng: SplitMix64, p: float) -> Graph:
    n = config.n
    adjacency = [0] * n

    def add(u: int, v: int) -> None:
        adjacency[u] |= 1 << v
        adjacency[v] |= 1 << u

    if config.require_connected:
        order = list(range(n))
        rng.shuffle(order)
        for i in range(1, n):
            add(order[i], order[rng.next_below(i)])

    for u in range(n):
        for v in range(u + 1, n):
            if adjacency[u] >> v & 1:
                continue
            if rng.next_float() < p:
                add(u, v)

    for v in range(n):
        while adjacency[v].bit_count() < config.delta:
            absent = [w for w in range(n) if w != v and not adjacency[v] >> w & 1]
            add(v, absent[rng.next_below(len(absent))])

    return Graph(n, tuple(adjacency))


def random_graph(config: RandomGraphConfig) -> Graph:
    """
    Generate a graph meeting the config; deterministic for a fixed seed.

    Raises:
        GenerationError: If no attempt was accepted within max_attempts

    Example:
        >>> G = random_graph(RandomGraphConfig(n=18, delta=3, edge_probabilities=(0.5,), seed=1))
        >>> G.order, min(G.degree_sequence) >= 3
        (18, True)
    """
    max_attempts = config.max_attempts or load_settings().theorem.max_attempts
    rng = SplitMix64(config.seed)
    schedule = config.edge_probabilities

    for attempt in range(max_attempts):
        p = schedule[attempt % len(schedule)]
        G = _attempt(config, rng, p)
        if min_degree(G) >= config.delta and (not config.require_connected or is_connected(G)):
            logger.debug(f"✓ random graph accepted (n={config.n}, p={p}, attempt {attempt + 1})")
            return G
        logger.debug(f"✗ random graph rejected (n={config.n}, p={p}, attempt {attempt + 1})")

    logger.error(f"Random graph generation exhausted {max_attempts} attempts (seed={config.seed})")
    raise GenerationError(
        f"No graph with n={config.n}, min degree >= {config.delta}"
        f"{', connected' if config.require_connected else ''} after {max_attempts} attempts "
        f"(seed={config.seed})",
        attempts=max_attempts,
        accepted=0,
    )
