"""Tests for the definitional oracle and the parity-factor search."""

import pytest

from spectral_parity.config.settings import Limits
from spectral_parity.exceptions import SizeLimitError
from spectral_parity.graphs.graph import complete, cycle, empty, members, path, vertex_set
from spectral_parity.harness.random_graphs import RandomGraphConfig, random_graph
from spectral_parity.harness.rng import SplitMix64
from spectral_parity.harness.scan import connected_labeled_graphs
from spectral_parity.parity.criterion import criterion_check
from spectral_parity.parity.oracle import feasible_demands, find_parity_factor, oracle_check
from spectral_parity.parity.verdict import FactorWitness, check_factor, validate_factor


class TestFindParityFactor:
    def test_c4_adjacent_pair(self, c4):
        witness = find_parity_factor(c4, 0b0011)
        assert witness.edges == ((0, 3), (1, 2), (2, 3))
        assert witness.degrees == (1, 1, 2, 2)
        assert validate_factor(c4, 0b0011, witness)

    def test_c4_opposite_pair_has_no_factor(self, c4):
        assert find_parity_factor(c4, 0b0101) is None

    def test_claw_two_leaves_fail(self, claw):
        assert find_parity_factor(claw, vertex_set([1, 2])) is None

    def test_k2_needs_odd_endpoints(self, k2):
        assert find_parity_factor(k2, 0) is None
        assert find_parity_factor(k2, 0b11).edges == ((0, 1),)

    def test_odd_demand_rejected(self, k4):
        with pytest.raises(ValueError, match="odd size"):
            find_parity_factor(k4, 0b0001)

    def test_demand_outside_graph_rejected(self, k4):
        with pytest.raises(ValueError, match="not inside"):
            find_parity_factor(k4, 0b10000)

    def test_edge_budget(self):
        with pytest.raises(SizeLimitError):
            find_parity_factor(complete(9), 0)

    @pytest.mark.parametrize("X", [0, 0b0011, 0b0101, 0b1111, 0b1001])
    def test_k4_every_even_demand(self, k4, X):
        witness = find_parity_factor(k4, X)
        assert witness is not None
        assert check_factor(k4, X, witness) == []


class TestCheckFactor:
    def test_reports_every_violation(self, c4):
        bogus = FactorWitness.from_edges(4, [(0, 1)])
        findings = check_factor(c4, 0, bogus)
        assert "Vertex 2 is isolated in F" in findings
        assert any("Vertex 0 has d_F = 1" in f for f in findings)

    def test_rejects_non_edges(self, c4):
        findings = check_factor(c4, 0b0101, FactorWitness.from_edges(4, [(0, 2)]))
        assert "Edge (0, 2) is not an edge of G" in findings


class TestOracleCheck:
    def test_known_verdicts(self, k2, c4, claw, k4):
        assert members(oracle_check(k2).witness) == ()
        assert oracle_check(c4).witness == 0b0101
        # X = {} already fails: every leaf would need positive even degree
        assert oracle_check(claw).witness == 0
        assert oracle_check(k4).has_spf

    @pytest.mark.parametrize("strategy", ["profile", "search"])
    def test_strategies_agree_on_small_graphs(self, strategy):
        for G in [path(4), cycle(5), cycle(6), complete(5)]:
            expected = oracle_check(G, strategy="profile")
            assert oracle_check(G, strategy=strategy) == expected

    def test_budgets(self):
        with pytest.raises(SizeLimitError, match="oracle order"):
            oracle_check(empty(13))
        with pytest.raises(SizeLimitError, match="edge count"):
            oracle_check(complete(9))
        small = Limits(oracle_order=3)
        with pytest.raises(SizeLimitError):
            oracle_check(path(4), limits=small)

    def test_unknown_strategy(self, k4):
        with pytest.raises(ValueError, match="Unknown oracle strategy"):
            oracle_check(k4, strategy="guess")

    def test_feasible_demands_of_c4(self, c4):
        assert feasible_demands(c4).tolist() == [0, 3, 6, 9, 12, 15]


@pytest.mark.parametrize("order", [1, 2, 3, 4, 5])
def test_criterion_matches_oracle_on_every_connected_graph(order):
    for G in connected_labeled_graphs(order):
        criterion = criterion_check(G)
        oracle = oracle_check(G)
        assert criterion.has_spf == oracle.has_spf, G.edges()


@pytest.mark.parametrize("seed", range(10))
def test_oracle_relabel_invariance(seed):
    rng = SplitMix64(seed)
    G = random_graph(RandomGraphConfig(n=7, delta=1, edge_probabilities=(0.4,), seed=seed))
    permutation = list(range(G.order))
    rng.shuffle(permutation)
    H = G.relabel(permutation)

    original = oracle_check(G)
    assert oracle_check(H).has_spf == original.has_spf
    if not original.has_spf:
        assert find_parity_factor(H, G.map_set(original.witness, permutation)) is None
