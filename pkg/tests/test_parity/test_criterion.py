"""Tests for the subset-scan criterion."""

import pytest

from spectral_parity.exceptions import SizeLimitError
from spectral_parity.graphs.graph import complete, cycle, disjoint_union, empty, members, path
from spectral_parity.harness.random_graphs import RandomGraphConfig, random_graph
from spectral_parity.harness.rng import SplitMix64
from spectral_parity.parity.criterion import (
    criterion_check,
    criterion_sample,
    max_violation_margin,
)
from spectral_parity.parity.verdict import SpfVerdict


class TestKnownVerdicts:
    def test_k2_singleton_witness(self, k2):
        verdict = criterion_check(k2)
        assert not verdict.has_spf
        assert members(verdict.witness) == (0,)
        assert verdict.detail == {"components": 1, "degree_sum": 1, "size": 1}

    def test_c4_opposite_pair(self, c4):
        verdict = criterion_check(c4)
        assert not verdict.has_spf
        assert verdict.witness == 0b0101
        assert verdict.detail["components"] == 2

    def test_claw_center(self, claw):
        verdict = criterion_check(claw)
        assert not verdict.has_spf
        assert members(verdict.witness) == (0,)
        assert verdict.detail == {"components": 3, "degree_sum": 3, "size": 1}

    def test_k4_has_factor(self, k4):
        verdict = criterion_check(k4)
        assert verdict == SpfVerdict(True, "criterion")

    def test_disconnected_caught_at_empty_set(self):
        verdict = criterion_check(disjoint_union(complete(3), complete(3)))
        assert verdict.witness == 0
        assert verdict.detail == {"components": 2, "degree_sum": 0, "size": 0}


def test_isolated_vertex_graph():
    verdict = criterion_check(complete(1))
    assert not verdict.has_spf
    assert verdict.witness == 0b1


def test_budget():
    with pytest.raises(SizeLimitError, match="criterion order"):
        criterion_check(empty(25))
    with pytest.raises(SizeLimitError):
        criterion_check(path(6), max_order=5)


class TestMaxViolationMargin:
    def test_c4(self, c4):
        mask, detail, margin = max_violation_margin(c4)
        assert (mask, margin) == (0b0101, 1)
        assert detail["components"] == 2

    def test_complete_graph_never_violates(self):
        mask, _detail, margin = max_violation_margin(complete(6))
        assert margin <= 0
        assert mask == 0

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_positive_iff_criterion_fails(self, n):
        for G in (path(n), cycle(n), complete(n)):
            _mask, _detail, margin = max_violation_margin(G)
            assert (margin >= 1) == (not criterion_check(G).has_spf)


def test_criterion_sample(c4, k4):
    hit = criterion_sample(c4, [0b0001, 0b0101])
    assert hit is not None and hit.witness == 0b0101
    assert criterion_sample(k4, [0b0011]) is None
    with pytest.raises(ValueError):
        criterion_sample(c4, [0b10000])


def test_verdict_json(c4):
    assert criterion_check(c4).to_json() == (
        '{"has_spf":false,"method":"criterion","witness":[0,2],'
        '"detail":{"components":2,"degree_sum":4,"size":2}}'
    )


def test_verdict_rejects_inconsistent_witness():
    with pytest.raises(ValueError, match="exactly when"):
        SpfVerdict(True, "oracle", witness=0b1)
    with pytest.raises(ValueError, match="violating detail"):
        SpfVerdict(False, "criterion", 0b1, {"components": 1, "degree_sum": 3, "size": 1})


@pytest.mark.parametrize("seed", range(50))
def test_relabel_invariance(seed):
    rng = SplitMix64(seed)
    G = random_graph(RandomGraphConfig(n=9, delta=1, edge_probabilities=(0.35,), seed=seed))
    permutation = list(range(G.order))
    rng.shuffle(permutation)
    H = G.relabel(permutation)

    original, permuted = criterion_check(G), criterion_check(H)
    assert original.has_spf == permuted.has_spf
    if not original.has_spf:
        # the image of a violating set still violates
        assert criterion_sample(H, [G.map_set(original.witness, permutation)]) is not None
