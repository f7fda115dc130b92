"""Builders for the join-of-cliques families.

All builders emit the canonical vertex layout: the K_s block first, the
large clique second, the small cliques (or isolated vertices) last. The
canonical 3-block partitions below follow the same order, so quotient
matrices come out with the row order of B_2, B_3 and B_*.

Parameters below the theorem range n >= 2*delta^2 are accepted (small
instances feed the brute-force oracles) and flagged by below_theorem_range.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from spectral_parity.graphs.graph import Graph, VertexSet, complete, disjoint_union, join

Family = Literal["Gstar", "G1", "G2", "G3"]


def _require_int(**values: int) -> None:
    for name, value in values.items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"{name} must be an integer, got {value!r}")


def ensure_delta(delta: int) -> None:
    _require_int(delta=delta)
    if delta < 3:
        raise ValueError(f"delta must be >= 3, got {delta}")


def ensure_extremal(delta: int, n: int) -> None:
    """delta >= 3 and n >= delta(delta-1)+2 (large clique nonempty)."""
    ensure_delta(delta)
    _require_int(n=n)
    if n < delta * (delta - 1) + 2:
        raise ValueError(
            f"G*(delta={delta}, n={n}) needs n >= delta(delta-1)+2 = {delta * (delta - 1) + 2}"
        )


def ensure_case1(s: int, delta: int, n: int) -> None:
    """s >= delta (s = delta is the extremal graph itself) and n >= (delta-1)s+2."""
    ensure_delta(delta)
    _require_int(s=s, n=n)
    if s < delta:
        raise ValueError(f"Case-1 family needs s >= delta = {delta}, got s={s}")
    if n < (delta - 1) * s + 2:
        raise ValueError(
            f"Case-1 family (s={s}, delta={delta}) needs n >= (delta-1)s+2 = "
            f"{(delta - 1) * s + 2}, got n={n}"
        )


def ensure_case3(s: int, delta: int, n: int) -> None:
    """1 <= s <= delta-1 and n >= ((delta-2)s+2)(delta+1-s)+s."""
    ensure_delta(delta)
    _require_int(s=s, n=n)
    if not 1 <= s <= delta - 1:
        raise ValueError(f"Case-3 family needs 1 <= s <= delta-1 = {delta - 1}, got s={s}")
    minimum = ((delta - 2) * s + 2) * (delta + 1 - s) + s
    if n < minimum:
        raise ValueError(
            f"Case-3 family (s={s}, delta={delta}) needs n >= ((delta-2)s+2)(delta+1-s)+s = "
            f"{minimum}, got n={n}"
        )


def below_theorem_range(delta: int, n: int) -> bool:
    """True when n < 2*delta^2, outside the hypotheses of the spectral condition."""
    return n < 2 * delta * delta


def part_count(s: int, delta: int) -> int:
    """t = (delta-2)s + 2, the number of components left after deleting S."""
    return (delta - 2) * s + 2


@dataclass(frozen=True)
class FamilyParams:
    """
    Parameters of a family instance.

    Attributes:
        delta: Minimum degree target (>= 3)
        n: Order
        s: Size of the joined clique (None for G*, which fixes s = delta)
    """

    delta: int
    n: int
    s: int | None = None

    @property
    def effective_s(self) -> int:
        return self.delta if self.s is None else self.s

    @property
    def below_theorem_range(self) -> bool:
        return below_theorem_range(self.delta, self.n)

    def to_dict(self) -> dict[str, int | None]:
        return {"delta": self.delta, "n": self.n, "s": self.s}


@dataclass(frozen=True)
class PartitionSpec:
    """
    K_s joined with a disjoint union of cliques of sizes parts[0] >= parts[1] >= ...

    Raises:
        ValueError: If s < 1, parts is empty, or parts is not positive and nonincreasing
    """

    s: int
    parts: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        _require_int(s=self.s)
        if self.s < 1:
            raise ValueError(f"s must be >= 1, got {self.s}")
        if not self.parts:
            raise ValueError("parts must contain at least one clique size")
        for index, size in enumerate(self.parts):
            _require_int(part=size)
            if size < 1:
                raise ValueError(f"parts[{index}] = {size} is not positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:], strict=False)):
            raise ValueError(f"parts must be sorted descending, got {list(self.parts)}")

    @property
    def order(self) -> int:
        return self.s + sum(self.parts)

    @property
    def t(self) -> int:
        return len(self.parts)


def build_general(spec: PartitionSpec) -> Graph:
    """
    K_s v (K_{n_1} u K_{n_2} u ... u K_{n_t}).

    Example:
        >>> build_general(PartitionSpec(2, (3, 2, 2))).order
        9
    """
    rest = complete(spec.parts[0])
    for size in spec.parts[1:]:
        rest = disjoint_union(rest, complete(size))
    return join(complete(spec.s), rest)


def general_blocks(spec: PartitionSpec) -> tuple[VertexSet, ...]:
    """K_s block followed by one block per clique, in layout order."""
    blocks = [(1 << spec.s) - 1]
    offset = spec.s
    for size in spec.parts:
        blocks.append(((1 << size) - 1) << offset)
        offset += size
    return tuple(blocks)


def extremal_spec(delta: int, n: int) -> PartitionSpec:
    ensure_extremal(delta, n)
    return PartitionSpec(delta, (n - delta * (delta - 1) - 1,) + (1,) * (delta * (delta - 2) + 1))


def case1_spec(s: int, delta: int, n: int) -> PartitionSpec:
    ensure_case1(s, delta, n)
    return PartitionSpec(s, (n - (delta - 1) * s - 1,) + (1,) * ((delta - 2) * s + 1))


def case3_spec(s: int, delta: int, n: int) -> PartitionSpec:
    ensure_case3(s, delta, n)
    small = delta + 1 - s
    copies_count = (delta - 2) * s + 1
    return PartitionSpec(s, (n - s - copies_count * small,) + (small,) * copies_count)


def build_extremal(delta: int, n: int) -> Graph:
    """
    G* = K_delta v (K_{n-delta(delta-1)-1} u (delta(delta-2)+1)K_1).

    Raises:
        ValueError: If delta < 3 or n < delta(delta-1)+2

    Example:
        >>> G = build_extremal(3, 18)
        >>> G.order, min(G.degree_sequence)
        (18, 3)
    """
    return build_general(extremal_spec(delta, n))


def build_case1(s: int, delta: int, n: int) -> Graph:
    """G_2 = K_s v (K_{n-(delta-1)s-1} u ((delta-2)s+1)K_1); s = delta gives G*."""
    return build_general(case1_spec(s, delta, n))


def build_case3(s: int, delta: int, n: int) -> Graph:
    """G_3 = K_s v (K_{n-s-((delta-2)s+1)(delta+1-s)} u ((delta-2)s+1)K_{delta+1-s})."""
    return build_general(case3_spec(s, delta, n))


def three_blocks(spec: PartitionSpec) -> tuple[VertexSet, VertexSet, VertexSet]:
    """Canonical partition [K_s, large clique, everything else]."""
    blocks = general_blocks(spec)
    rest = 0
    for block in blocks[2:]:
        rest |= block
    return blocks[0], blocks[1], rest


@dataclass(frozen=True)
class FamilyInstance:
    """A built family graph with its canonical partition."""

    family: Family
    params: FamilyParams
    spec: PartitionSpec
    graph: Graph
    blocks: tuple[VertexSet, ...]

    @property
    def below_theorem_range(self) -> bool:
        return self.params.below_theorem_range


def family_instance(
    family: Family, delta: int, n: int, s: int | None = None, parts: tuple[int, ...] = ()
) -> FamilyInstance:
    """
    Build a family member together with its canonical partition.

    G*, G2 and G3 use the 3-block partition; G1 uses one block per clique.

    Raises:
        ValueError: On bound violations, a missing s for G2/G3/G1, or parts
            that do not sum to n - s
    """
    if family == "Gstar":
        spec = extremal_spec(delta, n)
        return FamilyInstance(
            family, FamilyParams(delta, n), spec, build_general(spec), three_blocks(spec)
        )
    if s is None:
        raise ValueError(f"Family {family} needs s")
    if family == "G2":
        spec = case1_spec(s, delta, n)
    elif family == "G3":
        spec = case3_spec(s, delta, n)
    elif family == "G1":
        ensure_delta(delta)
        spec = PartitionSpec(s, tuple(parts))
        if spec.order != n:
            raise ValueError(f"parts sum to {sum(parts)} but n - s = {n - s}")
        return FamilyInstance(
            family, FamilyParams(delta, n, s), spec, build_general(spec), general_blocks(spec)
        )
    else:
        raise ValueError(f"Unknown family: {family!r}. Must be 'Gstar', 'G1', 'G2' or 'G3'")
    return FamilyInstance(
        family, FamilyParams(delta, n, s), spec, build_general(spec), three_blocks(spec)
    )
