"""Tests for power-iteration spectral radius."""

import math

import networkx as nx
import numpy as np
import pytest

from spectral_parity.exceptions import ConvergenceError
from spectral_parity.extremal.families import build_extremal
from spectral_parity.graphs.graph import (
    Graph,
    complete,
    cycle,
    delete_edges,
    disjoint_union,
    empty,
    path,
    star,
)
from spectral_parity.harness.random_graphs import RandomGraphConfig, random_graph
from spectral_parity.harness.rng import SplitMix64
from spectral_parity.spectra.power import spectral_radius


def eigvalsh_radius(G: Graph) -> float:
    return float(np.max(np.linalg.eigvalsh(G.adjacency_matrix())))


def test_complete_graph():
    assert spectral_radius(complete(5)).value == pytest.approx(4.0, abs=1e-10)


def test_regular_and_bipartite_graphs():
    assert spectral_radius(cycle(7)).value == pytest.approx(2.0, abs=1e-9)
    # bipartite: the unshifted iteration would oscillate
    assert spectral_radius(star(4)).value == pytest.approx(2.0, abs=1e-9)
    assert spectral_radius(path(3)).value == pytest.approx(math.sqrt(2), abs=1e-9)


def test_extremal_graph():
    result = spectral_radius(build_extremal(3, 18))
    assert result.value == pytest.approx(13.2050370308, abs=1e-8)
    assert result.residual <= 1e-10


def test_disconnected_takes_largest_component():
    G = disjoint_union(complete(4), cycle(5))
    assert spectral_radius(G).value == pytest.approx(3.0, abs=1e-9)


def test_edgeless_graph():
    result = spectral_radius(empty(3))
    assert (result.value, result.iterations) == (0.0, 0)


@pytest.mark.parametrize("seed", range(8))
def test_matches_eigvalsh(seed):
    nxg = nx.gnp_random_graph(16, 0.3, seed=seed)
    G = Graph.from_edges(16, nxg.edges())
    assert spectral_radius(G).value == pytest.approx(eigvalsh_radius(G), abs=1e-8)


def test_rejects_nonpositive_tolerance():
    with pytest.raises(ValueError, match="> 0"):
        spectral_radius(complete(3), tol=0)


def test_convergence_error_carries_best_estimate():
    with pytest.raises(ConvergenceError) as excinfo:
        spectral_radius(path(10), tol=1e-12, max_iterations=1)
    assert excinfo.value.iterations == 1
    assert 0 < excinfo.value.best_value < 2
    assert excinfo.value.best_residual > 1e-12


def _connected_sample(seed: int) -> Graph:
    return random_graph(RandomGraphConfig(n=12, delta=2, edge_probabilities=(0.4,), seed=seed))


@pytest.mark.parametrize("seed", range(10))
def test_perron_bounds(seed):
    G = _connected_sample(seed)
    rho = spectral_radius(G).value
    assert 2 * G.edge_count / G.order <= rho + 1e-10
    assert rho <= max(G.degree_sequence) + 1e-10


@pytest.mark.parametrize("G", [complete(6), cycle(9)])
def test_perron_bounds_tight_on_regular_graphs(G):
    rho = spectral_radius(G).value
    assert rho == pytest.approx(2 * G.edge_count / G.order, abs=1e-9)
    assert rho == pytest.approx(max(G.degree_sequence), abs=1e-9)


def test_proper_subgraph_has_smaller_radius():
    for seed in range(200):
        G = _connected_sample(seed)
        edges = G.edges()
        H = delete_edges(G, [edges[seed % len(edges)]])
        assert spectral_radius(H).value < spectral_radius(G).value - 1e-12


def test_relabel_invariance():
    G = build_extremal(3, 18)
    rng = SplitMix64(17)
    for _ in range(5):
        permutation = list(range(G.order))
        rng.shuffle(permutation)
        assert spectral_radius(G.relabel(permutation)).value == pytest.approx(
            spectral_radius(G).value, abs=1e-10
        )
