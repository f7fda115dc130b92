"""Definitional oracle for strong parity factors.

A graph has a strong parity factor iff for every X subset of V(G) with |X| even
there is a spanning subgraph F with no isolated vertex whose odd-degree
vertices are exactly X.

Two exact strategies:
    - "search": depth-first search over edge subsets for every even X
      (find_parity_factor), with degree-demand pruning
    - "profile": one pass over the edges collecting every reachable
      (odd set, covered set) pair; the feasible X are the odd sets whose
      covered set is V(G)

Both report the first failing X in ascending bitmask order.
"""

from __future__ import annotations

import logging
from typing import Literal

import numpy as np

from spectral_parity.config.settings import Limits, load_settings
from spectral_parity.exceptions import SizeLimitError
from spectral_parity.graphs.graph import Graph, VertexSet, members
from spectral_parity.parity.verdict import FactorWitness, SpfVerdict

logger = logging.getLogger(__name__)

OracleStrategy = Literal["profile", "search"]


def _residual_need(degree: int, wants_odd: bool) -> int:
    """Edges v still needs: 0 if done, 1 to fix parity, 2 if isolated but wants even."""
    if degree % 2 != wants_odd:
        return 1
    if degree == 0:
        return 2
    return 0


def find_parity_factor(
    G: Graph, X: VertexSet, max_edges: int | None = None
) -> FactorWitness | None:
    """
    Search for a spanning subgraph F with d_F(v) >= 1 everywhere and odd exactly on X.

    Edges are decided in lexicographic order, include-branch first. A branch is
    cut as soon as some vertex has fewer undecided edges left than it still
    needs (which also covers vertices whose edges are all decided).

    Args:
        G: Host graph
        X: Demand set with |X| even
        max_edges: Edge budget (default: settings limits.oracle_edges, 32)

    Returns:
        FactorWitness, or None when no F exists (exhaustive at this size)

    Raises:
        ValueError: If |X| is odd or X leaves V(G)
        SizeLimitError: If |E(G)| exceeds the budget

    Example:
        >>> find_parity_factor(cycle(4), 0b0011).edges
        ((0, 3), (1, 2), (2, 3))
        >>> find_parity_factor(cycle(4), 0b0101) is None
        True
    """
    G.check_set(X)
    if X.bit_count() % 2:
        raise ValueError(
            f"Demand set {members(X)} has odd size {X.bit_count()}; the degree sum of F would be odd"
        )
    limit = max_edges or load_settings().limits.oracle_edges
    edges = G.edges()
    if len(edges) > limit:
        raise SizeLimitError("edge count |E|", limit, len(edges))

    wants_odd = [bool(X >> v & 1) for v in range(G.order)]
    degree = [0] * G.order
    remaining = list(G.degree_sequence)
    chosen: list[tuple[int, int]] = []

    def feasible(v: int) -> bool:
        return remaining[v] >= _residual_need(degree[v], wants_odd[v])

    if not all(feasible(v) for v in range(G.order)):
        return None

    def extend(index: int) -> bool:
        if index == len(edges):
            return True
        u, v = edges[index]
        remaining[u] -= 1
        remaining[v] -= 1

        chosen.append((u, v))
        degree[u] += 1
        degree[v] += 1
        if feasible(u) and feasible(v) and extend(index + 1):
            return True
        chosen.pop()
        degree[u] -= 1
        degree[v] -= 1

        if feasible(u) and feasible(v) and extend(index + 1):
            return True

        remaining[u] += 1
        remaining[v] += 1
        return False

    if not extend(0):
        return None
    return FactorWitness.from_edges(G.order, chosen)


def _check_budget(G: Graph, limits: Limits) -> None:
    if G.order > limits.oracle_order:
        raise SizeLimitError("oracle order n", limits.oracle_order, G.order)
    if G.edge_count > limits.oracle_edges:
        raise SizeLimitError("oracle edge count |E|", limits.oracle_edges, G.edge_count)


def _even_masks(order: int) -> np.ndarray:
    masks = np.arange(1 << order, dtype=np.int64)
    parity = np.zeros(masks.shape, dtype=np.int64)
    for v in range(order):
        parity ^= (masks >> v) & 1
    return masks[parity == 0]


def feasible_demands(G: Graph) -> np.ndarray:
    """
    Every X for which a no-isolated-vertex F with odd set X exists, ascending.

    States are (odd << n) | covered over all edge subsets processed so far;
    odd sets are always inside covered sets, so at most 3^n states survive.
    """
    n = G.order
    full = G.full_mask
    states = np.zeros(1, dtype=np.int64)
    for u, v in G.edges():
        pair = (1 << u) | (1 << v)
        toggled = (((states >> n) ^ pair) << n) | (states & full) | pair
        states = np.unique(np.concatenate((states, toggled)))
    covered_all = (states & full) == full
    return np.unique(states[covered_all] >> n)


def oracle_check(
    G: Graph, strategy: OracleStrategy = "profile", limits: Limits | None = None
) -> SpfVerdict:
    """
    Decide strong-parity-factor existence from the definition.

    Args:
        G: Graph with n <= 12 and |E| <= 32 (default budgets)
        strategy: "profile" (reachable demand profile) or "search"
            (find_parity_factor for each of the 2^(n-1) even X)
        limits: Size budgets (default: settings limits)

    Returns:
        SpfVerdict; on failure the witness is the first failing X in
        ascending bitmask order

    Raises:
        SizeLimitError: If n or |E| exceeds the budget
        ValueError: On an unknown strategy

    Example:
        >>> v = oracle_check(complete(2))
        >>> v.has_spf, members(v.witness)
        (False, ())
    """
    limits = limits or load_settings().limits
    _check_budget(G, limits)

    if strategy == "profile":
        evens = _even_masks(G.order)
        missing = evens[~np.isin(evens, feasible_demands(G))]
        failing = int(missing[0]) if missing.size else None
    elif strategy == "search":
        failing = None
        for X in _even_masks(G.order).tolist():
            if find_parity_factor(G, X, max_edges=limits.oracle_edges) is None:
                failing = X
                break
    else:
        raise ValueError(f"Unknown oracle strategy: {strategy!r}. Must be 'profile' or 'search'")

    if failing is None:
        logger.debug(f"✓ oracle ({strategy}): all {1 << (G.order - 1)} demand sets feasible")
        return SpfVerdict(True, "oracle")
    logger.debug(f"✗ oracle ({strategy}): X={members(failing)} admits no factor")
    return SpfVerdict(False, "oracle", failing)
