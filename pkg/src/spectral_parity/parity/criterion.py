"""Subset-scan criterion for strong parity factors.

G has a strong parity factor iff c(G - S) <= sum_{v in S} d_G(v) - 2|S| + 1 for
every S subset of V(G). S = empty reduces to connectivity and S = V(G) uses
c(empty graph) = 0.

Subset sizes and degree sums are tabulated with numpy in chunks; since
c(G - S) <= n - |S|, only subsets with sum d - |S| <= n - 2 can violate the
bound, and only those reach the bitset component count.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator

import numpy as np

from spectral_parity.config.settings import load_settings
from spectral_parity.exceptions import SizeLimitError
from spectral_parity.graphs.graph import Graph, VertexSet, count_components, members
from spectral_parity.parity.verdict import SpfVerdict, ViolationDetail, violation_margin

logger = logging.getLogger(__name__)

CHUNK_BITS = 16


def _subset_tables(
    degrees: tuple[int, ...], start: int, stop: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    masks = np.arange(start, stop, dtype=np.int64)
    sizes = np.zeros(masks.shape, dtype=np.int64)
    degree_sums = np.zeros(masks.shape, dtype=np.int64)
    for v, degree in enumerate(degrees):
        bit = (masks >> v) & 1
        sizes += bit
        degree_sums += degree * bit
    return masks, sizes, degree_sums


def _chunks(order: int) -> Iterator[tuple[int, int]]:
    total = 1 << order
    step = 1 << CHUNK_BITS
    for start in range(0, total, step):
        yield start, min(start + step, total)


def _detail(G: Graph, S: VertexSet) -> ViolationDetail:
    return {
        "components": count_components(G.adjacency, G.full_mask & ~S),
        "degree_sum": sum(G.degree_sequence[v] for v in members(S)),
        "size": S.bit_count(),
    }


def _check_budget(G: Graph, max_order: int | None) -> None:
    limit = max_order or load_settings().limits.criterion_order
    if G.order > limit:
        raise SizeLimitError(
            "criterion order n",
            limit,
            G.order,
            advice="check sampled vertex subsets with criterion_sample instead of the full scan",
        )


def criterion_check(G: Graph, max_order: int | None = None) -> SpfVerdict:
    """
    Decide strong-parity-factor existence by scanning every S subset of V(G).

    Args:
        G: Any graph (disconnected inputs are caught at S = empty)
        max_order: Scan budget (default: settings limits.criterion_order, 24)

    Returns:
        SpfVerdict; on failure the witness is the first violating S in
        ascending bitmask order, with its ViolationDetail

    Raises:
        SizeLimitError: If G.order exceeds the budget

    Example:
        >>> v = criterion_check(star(3))
        >>> v.has_spf, members(v.witness), v.detail
        (False, (0,), {'components': 3, 'degree_sum': 3, 'size': 1})
    """
    _check_budget(G, max_order)
    degrees = G.degree_sequence
    n = G.order
    scanned = 0

    for start, stop in _chunks(n):
        masks, sizes, degree_sums = _subset_tables(degrees, start, stop)
        candidates = masks[degree_sums - sizes <= n - 2]
        scanned += len(candidates)
        for S in candidates.tolist():
            detail = _detail(G, S)
            if violation_margin(detail) >= 1:
                logger.debug(f"✗ criterion: S={members(S)} violates ({detail})")
                return SpfVerdict(False, "criterion", S, detail)

    logger.debug(f"✓ criterion: no violating S among {scanned} candidates (n={n})")
    return SpfVerdict(True, "criterion")


def max_violation_margin(
    G: Graph, max_order: int | None = None
) -> tuple[VertexSet, ViolationDetail, int]:
    """
    Subset S maximizing c(G - S) - (sum d - 2|S| + 1).

    Subsets are visited by descending upper bound (n - |S|) - (sum d - 2|S| + 1),
    and the scan stops once the bound drops below the best margin seen. S = empty
    has margin c(G) - 1 >= 0, so subsets with a negative bound are never visited.
    Ties go to the smallest bitmask.

    Returns:
        (S, detail, margin); margin >= 1 iff the criterion is violated

    Raises:
        SizeLimitError: If G.order exceeds the budget
    """
    _check_budget(G, max_order)
    n = G.order
    bounds_parts = []
    masks_parts = []
    for start, stop in _chunks(n):
        masks, sizes, degree_sums = _subset_tables(G.degree_sequence, start, stop)
        bound = (n - sizes) - (degree_sums - 2 * sizes + 1)
        keep = bound >= 0
        bounds_parts.append(bound[keep])
        masks_parts.append(masks[keep])
    bounds = np.concatenate(bounds_parts)
    masks = np.concatenate(masks_parts)
    order = np.lexsort((masks, -bounds))

    best_mask, best_detail, best_margin = None, None, None
    for index in order.tolist():
        bound = int(bounds[index])
        if best_margin is not None and bound < best_margin:
            break
        S = int(masks[index])
        detail = _detail(G, S)
        margin = violation_margin(detail)
        if best_margin is None or margin > best_margin or (margin == best_margin and S < best_mask):
            best_mask, best_detail, best_margin = S, detail, margin

    logger.debug(f"max violation margin {best_margin} at S={members(best_mask)}")
    return best_mask, best_detail, best_margin


def criterion_sample(G: Graph, subsets: Iterable[VertexSet]) -> SpfVerdict | None:
    """
    Check only the given subsets.

    A hit proves that G has no strong parity factor; a miss proves nothing,
    so None is returned instead of a positive verdict.
    """
    for S in subsets:
        G.check_set(S)
        detail = _detail(G, S)
        if violation_margin(detail) >= 1:
            return SpfVerdict(False, "criterion", S, detail)
    return None
