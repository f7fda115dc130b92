"""Verdict and witness records for strong-parity-factor decisions."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Literal, TypedDict

from spectral_parity.graphs.graph import Graph, VertexSet, members

Method = Literal["criterion", "oracle"]


class ViolationDetail(TypedDict):
    """Counts behind a criterion witness S."""

    components: int  # c(G - S), 0 when S = V(G)
    degree_sum: int  # sum of d_G(v) over S
    size: int  # |S|


def violation_margin(detail: ViolationDetail) -> int:
    """c(G - S) - (sum d - 2|S| + 1); positive means S violates the criterion."""
    return detail["components"] - (detail["degree_sum"] - 2 * detail["size"] + 1)


@dataclass(frozen=True)
class SpfVerdict:
    """
    Outcome of a strong-parity-factor decision.

    Attributes:
        has_spf: True iff G has a strong parity factor
        method: "criterion" (subset scan) or "oracle" (demand-set search)
        witness: Violating S (criterion) or failing demand set X (oracle); None iff has_spf
        detail: ViolationDetail for criterion witnesses

    Raises:
        ValueError: If the witness/has_spf pairing or a criterion detail is inconsistent
    """

    has_spf: bool
    method: Method
    witness: VertexSet | None = None
    detail: ViolationDetail | None = None

    def __post_init__(self) -> None:
        if (self.witness is None) != self.has_spf:
            raise ValueError(
                f"Witness must be present exactly when has_spf is False "
                f"(has_spf={self.has_spf}, witness={self.witness})"
            )
        if self.method == "criterion" and self.witness is not None:
            if self.detail is None or violation_margin(self.detail) < 1:
                raise ValueError(f"Criterion witness without a violating detail: {self.detail}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "has_spf": self.has_spf,
            "method": self.method,
            "witness": None if self.witness is None else list(members(self.witness)),
            "detail": dict(self.detail) if self.detail else {},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


@dataclass(frozen=True)
class FactorWitness:
    """
    Spanning subgraph F realizing one demand set X.

    Attributes:
        edges: Edges of F as (u, v) with u < v, lexicographic
        degrees: d_F(v) for every vertex of the host graph
    """

    edges: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...]

    @classmethod
    def from_edges(cls, order: int, edges: list[tuple[int, int]]) -> FactorWitness:
        degrees = [0] * order
        for u, v in edges:
            degrees[u] += 1
            degrees[v] += 1
        return cls(tuple(sorted(edges)), tuple(degrees))

    def to_dict(self) -> dict[str, Any]:
        return {"edges": [list(e) for e in self.edges], "degrees": list(self.degrees)}


def check_factor(G: Graph, X: VertexSet, witness: FactorWitness) -> list[str]:
    """
    Re-check a factor against the definition, independently of the search.

    Args:
        G: Host graph
        X: Demand set (odd-degree vertices)
        witness: Candidate factor

    Returns:
        List of findings (empty list = valid factor)

    Example:
        >>> check_factor(cycle(4), 0b0011, FactorWitness.from_edges(4, [(0, 3), (1, 2), (2, 3)]))
        []
    """
    findings = []
    if len(witness.degrees) != G.order:
        return [f"Degree vector has {len(witness.degrees)} entries for order {G.order}"]

    recount = [0] * G.order
    for u, v in witness.edges:
        if not (0 <= u < G.order and 0 <= v < G.order) or not G.has_edge(u, v):
            findings.append(f"Edge ({u}, {v}) is not an edge of G")
            continue
        recount[u] += 1
        recount[v] += 1
    if len(set(witness.edges)) != len(witness.edges):
        findings.append("Factor repeats an edge")
    if tuple(recount) != witness.degrees:
        findings.append(f"Stored degrees {list(witness.degrees)} differ from recount {recount}")

    for v, degree in enumerate(recount):
        if degree < 1:
            findings.append(f"Vertex {v} is isolated in F")
        wants_odd = bool(X >> v & 1)
        if (degree % 2 == 1) != wants_odd:
            findings.append(
                f"Vertex {v} has d_F = {degree} but should be {'odd' if wants_odd else 'even'}"
            )
    if sum(recount) % 2:
        findings.append("Degree sum of F is odd")
    return findings


def validate_factor(G: Graph, X: VertexSet, witness: FactorWitness) -> bool:
    """True if the witness satisfies every definitional constraint for X."""
    return len(check_factor(G, X, witness)) == 0
