"""Structure fingerprint for recognizing the extremal graph among samples.

A fingerprint match is only a candidate; it is confirmed by an isomorphism
test (networkx VF2), so fingerprint collisions never produce a false match.

See: docs/architecture/decisions/0004-fingerprint-networkx-isomorphism.md
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import networkx as nx  # ADR-0004: isomorphism confirmation

from spectral_parity.graphs.graph import Graph, component_masks, vertex_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Fingerprint:
    """
    Attributes:
        degrees: Sorted degree sequence
        edge_degrees: Sorted (min, max) endpoint-degree pairs, one per edge
        residual_components: Sorted component sizes after deleting every
            maximum-degree vertex (empty when nothing is left)
    """

    degrees: tuple[int, ...]
    edge_degrees: tuple[tuple[int, int], ...]
    residual_components: tuple[int, ...]


def fingerprint(G: Graph) -> Fingerprint:
    """
    Example:
        >>> fingerprint(star(3)).residual_components
        (1, 1, 1)
    """
    degree = G.degree_sequence
    top = max(degree)
    alive = G.full_mask & ~vertex_set(v for v in range(G.order) if degree[v] == top)
    pairs = (tuple(sorted((degree[u], degree[v]))) for u, v in G.edges())
    return Fingerprint(
        degrees=tuple(sorted(degree)),
        edge_degrees=tuple(sorted(pairs)),
        residual_components=tuple(
            sorted(c.bit_count() for c in component_masks(G.adjacency, alive))
        ),
    )


def to_networkx(G: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(G.order))
    graph.add_edges_from(G.edges())
    return graph


def same_structure(G: Graph, H: Graph) -> bool:
    """True iff G and H are isomorphic; the fingerprint filters before VF2 runs."""
    if G.order != H.order or G.edge_count != H.edge_count:
        return False
    if fingerprint(G) != fingerprint(H):
        return False
    isomorphic = nx.is_isomorphic(to_networkx(G), to_networkx(H))
    if not isomorphic:
        logger.debug(f"Fingerprint collision without isomorphism (n={G.order})")
    return isomorphic
