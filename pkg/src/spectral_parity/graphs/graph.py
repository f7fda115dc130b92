"""Immutable simple graphs on adjacency-row bitsets.

Vertices are dense 0-based integers. Every operation returns a new Graph;
join and disjoint_union place the left operand's block first so that
witness sets stay reproducible across runs.

See: docs/architecture/decisions/0001-bitset-graphs-numpy-spectra.md
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

# Single machine word per row; covers every desk-scale workload (n <= 63).
MAX_ORDER = 63

# A VertexSet is a bitmask over 0..n-1 relative to its host graph.
VertexSet = int


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    """Pack vertex labels into a bitmask."""
    mask = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"Vertex labels must be nonnegative, got {v}")
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> tuple[int, ...]:
    """Unpack a bitmask into ascending vertex labels."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def component_masks(adjacency: Sequence[int], alive: int) -> list[int]:
    """Bitmasks of the connected components inside alive, ordered by lowest vertex."""
    remaining = alive
    components = []
    while remaining:
        seed = remaining & -remaining
        component = seed
        frontier = seed
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            fresh = adjacency[low.bit_length() - 1] & remaining & ~component
            component |= fresh
            frontier |= fresh
        remaining &= ~component
        components.append(component)
    return components


def count_components(adjacency: Sequence[int], alive: int) -> int:
    """Number of connected components of the subgraph induced by the alive bitmask."""
    return len(component_masks(adjacency, alive))


@dataclass(frozen=True)
class Graph:
    """
    Undirected simple graph of order 1..63.

    Attributes:
        order: Vertex count n (vertices are 0..n-1)
        adjacency: Per-vertex neighbor bitsets

    Raises:
        ValueError: On asymmetric rows, loops, out-of-range bits, or bad order
    """

    order: int
    adjacency: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.order <= MAX_ORDER:
            raise ValueError(f"Graph order must be in 1..{MAX_ORDER}, got {self.order}")
        if len(self.adjacency) != self.order:
            raise ValueError(
                f"Adjacency has {len(self.adjacency)} rows for a graph of order {self.order}"
            )
        full = (1 << self.order) - 1
        for u, row in enumerate(self.adjacency):
            if row & ~full:
                raise ValueError(f"Vertex {u} has a neighbor outside 0..{self.order - 1}")
            if row >> u & 1:
                raise ValueError(f"Loop at vertex {u}")
            for v in members(row):
                if not self.adjacency[v] >> u & 1:
                    raise ValueError(f"Adjacency is not symmetric at edge ({u}, {v})")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """
        Build a graph from an edge iterable.

        Raises:
            ValueError: On loops, duplicate edges, or endpoints outside 0..order-1
        """
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"Loop edge ({u}, {v})")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"Edge ({u}, {v}) out of range for order {order}")
            if rows[u] >> v & 1:
                raise ValueError(f"Duplicate edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    @property
    def full_mask(self) -> VertexSet:
        return (1 << self.order) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return members(self.adjacency[v])

    @cached_property
    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(self.degree_sequence) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""
        out = []
        for u, row in enumerate(self.adjacency):
            out.extend((u, v) for v in members(row >> (u + 1) << (u + 1)))
        return out

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix as float64."""
        matrix = np.zeros((self.order, self.order), dtype=np.float64)
        for u, v in self.edges():
            matrix[u, v] = 1.0
            matrix[v, u] = 1.0
        return matrix

    def relabel(self, permutation: Sequence[int]) -> Graph:
        """Copy of the graph with vertex v renamed to permutation[v]."""
        if sorted(permutation) != list(range(self.order)):
            raise ValueError(f"Not a permutation of 0..{self.order - 1}: {list(permutation)}")
        return Graph.from_edges(
            self.order, ((permutation[u], permutation[v]) for u, v in self.edges())
        )

    def map_set(self, mask: VertexSet, permutation: Sequence[int]) -> VertexSet:
        return vertex_set(permutation[v] for v in members(mask))

    def check_set(self, mask: VertexSet) -> None:
        if mask < 0 or mask & ~self.full_mask:
            raise ValueError(f"Vertex set {members(mask)} is not inside 0..{self.order - 1}")


def complete(n: int) -> Graph:
    """
    Complete graph K_n.

    Raises:
        ValueError: If n < 1

    Example:
        >>> complete(4).edge_count
        6
    """
    if n < 1:
        raise ValueError(f"complete(n) requires n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    """Edgeless graph nK_1."""
    if n < 1:
        raise ValueError(f"empty(n) requires n >= 1, got {n}")
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle(n) requires n >= 3, got {n}")
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)] + [(0, n - 1)])


def star(m: int) -> Graph:
    """K_{1,m} with the center at vertex 0."""
    return Graph.from_edges(m + 1, ((0, leaf) for leaf in range(1, m + 1)))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """G ∪ H with H's labels shifted by |G|; no cross edges."""
    shift = G.order
    return Graph(G.order + H.order, G.adjacency + tuple(row << shift for row in H.adjacency))


def copies(t: int, G: Graph) -> Graph:
    """tG, the disjoint union of t copies of G."""
    if t < 1:
        raise ValueError(f"copies(t, G) requires t >= 1, got {t}")
    result = G
    for _ in range(t - 1):
        result = disjoint_union(result, G)
    return result


def join(G: Graph, H: Graph) -> Graph:
    """G ∨ H: disjoint union plus every edge between V(G) and V(H)."""
    shift = G.order
    left_block = G.full_mask
    right_block = H.full_mask << shift
    rows = tuple(row | right_block for row in G.adjacency) + tuple(
        (row << shift) | left_block for row in H.adjacency
    )
    return Graph(G.order + H.order, rows)


def delete_vertices(G: Graph, S: VertexSet) -> Graph:
    """
    Induced subgraph G - S, survivors relabeled in ascending order.

    Raises:
        ValueError: If S is not a subset of V(G) or S = V(G)
    """
    G.check_set(S)
    if S == G.full_mask:
        raise ValueError("Deleting every vertex leaves the empty graph, which is not representable")
    if S == 0:
        return G
    survivors = members(G.full_mask & ~S)
    position = {v: i for i, v in enumerate(survivors)}
    rows = []
    for v in survivors:
        rows.append(vertex_set(position[w] for w in members(G.adjacency[v] & ~S)))
    return Graph(len(survivors), tuple(rows))


def delete_edges(G: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    """Spanning subgraph of G without the given edges."""
    rows = list(G.adjacency)
    for u, v in edges:
        if not G.has_edge(u, v):
            raise ValueError(f"Edge ({u}, {v}) is not in the graph")
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(G.order, tuple(rows))


def component_count(G: Graph) -> int:
    """c(G), the number of connected components."""
    return count_components(G.adjacency, G.full_mask)


def is_connected(G: Graph) -> bool:
    return component_count(G) == 1


def degrees(G: Graph) -> tuple[int, ...]:
    return G.degree_sequence


def min_degree(G: Graph) -> int:
    """δ(G)."""
    return min(G.degree_sequence)
