"""Quotient matrices of vertex partitions.

Entries are kept as exact Fractions of integer neighbor counts; equitability
is decided on those counts, never on floats. The characteristic polynomial
is computed exactly (Faddeev-LeVerrier over Fractions) so closed-form
cubics can be compared against it with zero tolerance.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from spectral_parity.config.settings import load_settings
from spectral_parity.exceptions import SizeLimitError
from spectral_parity.graphs.graph import Graph, VertexSet, members
from spectral_parity.spectra.cubic import CubicPoly

ExactMatrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class QuotientDecomposition:
    """
    A vertex partition with its quotient matrix.

    Attributes:
        blocks: Disjoint nonempty VertexSets covering V(G), in caller order
        exact: r x r matrix of average row sums b_ij as Fractions
        equitable: Every vertex of V_i has the same number of neighbors in V_j
    """

    blocks: tuple[VertexSet, ...]
    exact: ExactMatrix
    equitable: bool

    @cached_property
    def matrix(self) -> np.ndarray:
        """Quotient matrix as float64."""
        return np.array([[float(b) for b in row] for row in self.exact], dtype=np.float64)

    @property
    def size(self) -> int:
        return len(self.blocks)

    def to_rows(self) -> list[list[int | float]]:
        """Rows with integral entries as int (report and CSV output)."""
        return [
            [int(b) if b.denominator == 1 else float(b) for b in row] for row in self.exact
        ]


def quotient(G: Graph, blocks: Sequence[VertexSet]) -> QuotientDecomposition:
    """
    Quotient matrix of G with respect to an ordered partition.

    Args:
        G: Host graph
        blocks: Ordered VertexSets partitioning V(G)

    Returns:
        QuotientDecomposition with b_ij = (sum over u in V_i of |N(u) & V_j|) / |V_i|

    Raises:
        ValueError: If a block is empty, blocks overlap, or a vertex is missed

    Example:
        >>> q = quotient(complete(4), [0b0001, 0b1110])
        >>> q.to_rows(), q.equitable
        ([[0, 3], [1, 2]], True)
    """
    covered = 0
    for index, block in enumerate(blocks):
        G.check_set(block)
        if block == 0:
            raise ValueError(f"Block {index} is empty")
        if covered & block:
            raise ValueError(f"Block {index} overlaps earlier blocks at {members(covered & block)}")
        covered |= block
    if covered != G.full_mask:
        raise ValueError(f"Blocks miss vertices {members(G.full_mask & ~covered)}")

    rows = []
    equitable = True
    for block_i in blocks:
        row = []
        vertices = members(block_i)
        for block_j in blocks:
            counts = [(G.adjacency[u] & block_j).bit_count() for u in vertices]
            if len(set(counts)) > 1:
                equitable = False
            row.append(Fraction(sum(counts), len(vertices)))
        rows.append(tuple(row))

    return QuotientDecomposition(tuple(blocks), tuple(rows), equitable)


def characteristic_polynomial(matrix: Sequence[Sequence[int | Fraction]]) -> tuple[Fraction, ...]:
    """
    Exact characteristic polynomial det(xI - M) by Faddeev-LeVerrier.

    Returns:
        Coefficients (c_{r-1}, ..., c_0) of the monic polynomial
        x^r + c_{r-1} x^{r-1} + ... + c_0

    Example:
        >>> characteristic_polynomial([[2, 11, 4], [3, 10, 0], [3, 0, 0]])
        (Fraction(-12, 1), Fraction(-25, 1), Fraction(120, 1))
    """
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError(f"Matrix must be square, got row lengths {[len(r) for r in matrix]}")
    A = [[Fraction(v) for v in row] for row in matrix]
    identity = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]

    coefficients = []
    previous = [[Fraction(0)] * size for _ in range(size)]
    c = Fraction(1)
    for k in range(1, size + 1):
        # M_k = A M_{k-1} + c_{r-k+1} I ; c_{r-k} = -tr(A M_k) / k
        M = [
            [
                sum((A[i][m] * previous[m][j] for m in range(size)), Fraction(0))
                + c * identity[i][j]
                for j in range(size)
            ]
            for i in range(size)
        ]
        trace = sum((A[i][m] * M[m][i] for i in range(size) for m in range(size)), Fraction(0))
        c = -trace / k
        coefficients.append(c)
        previous = M
    return tuple(coefficients)


def characteristic_cubic(decomposition: QuotientDecomposition) -> CubicPoly:
    """
    Characteristic polynomial of a 3-block quotient as a CubicPoly.

    Integral coefficients are returned as int.

    Raises:
        ValueError: If the partition does not have exactly 3 blocks
    """
    if decomposition.size != 3:
        raise ValueError(f"Expected a 3-block quotient, got {decomposition.size} blocks")
    c2, c1, c0 = (
        int(v) if v.denominator == 1 else v for v in characteristic_polynomial(decomposition.exact)
    )
    return CubicPoly(c2, c1, c0)


def largest_eigenvalue_small(
    M: Sequence[Sequence[float]] | np.ndarray, max_size: int | None = None
) -> float:
    """
    Largest real eigenvalue of a small real matrix.

    Args:
        M: r x r matrix with real spectrum (quotients of equitable partitions)
        max_size: Size budget (default: settings limits.small_eigen_size, 8)

    Raises:
        ValueError: If M is not square
        SizeLimitError: If r exceeds the budget

    Example:
        >>> round(largest_eigenvalue_small([[1, 2], [2, 0]]), 10)
        2.5615528128
    """
    max_size = max_size or load_settings().limits.small_eigen_size
    array = np.asarray(M, dtype=np.float64)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise ValueError(f"Matrix must be square, got shape {array.shape}")
    if array.shape[0] > max_size:
        raise SizeLimitError("matrix size r", max_size, array.shape[0])
    eigenvalues = np.linalg.eigvals(array)
    return float(np.max(eigenvalues.real))
