"""Tests for closed-form quotient polynomials and auxiliary functions.

The closed forms are compared with the exact characteristic polynomial of the
quotient matrix assembled from the built graph, at zero tolerance.
"""

from fractions import Fraction

import pytest

from spectral_parity.extremal.families import (
    build_case1,
    build_case3,
    build_extremal,
    case1_spec,
    case3_spec,
    extremal_spec,
    three_blocks,
)
from spectral_parity.extremal.polynomials import (
    b2_matrix,
    b3_matrix,
    bstar_matrix,
    comparison_point,
    eval_g,
    eval_h,
    eval_phiB3_prime,
    g_at_smax,
    g_at_smax_closed,
    g_at_x0_closed,
    g_final_bound,
    h_at_x0_closed,
    h_final_bound,
    phi_B2,
    phi_B3,
    phi_Bstar,
    phiB3_prime_at_x0_closed,
    phiB3_prime_final_bound,
)
from spectral_parity.harness.rng import SplitMix64
from spectral_parity.spectra.cubic import largest_root
from spectral_parity.spectra.power import spectral_radius
from spectral_parity.spectra.quotient import characteristic_cubic, quotient

GRID = [(d, 2 * d * d + offset) for d in (3, 4, 5) for offset in (0, 7)]
CASE1 = [(s, d, n) for d, n in GRID for s in range(d + 1, (n - 2) // (d - 1) + 1)]
CASE3 = [(s, d, n) for d, n in GRID for s in range(1, d)]


class TestKnownCoefficients:
    def test_phi_bstar(self):
        assert phi_Bstar(3, 18).as_list() == [-12, -25, 120]
        assert bstar_matrix(3, 18) == [[2, 11, 4], [3, 10, 0], [3, 0, 0]]

    def test_phi_b2(self):
        assert phi_B2(4, 3, 18).as_list() == [-11, -32, 160]
        assert phi_B2(3, 3, 18) == phi_Bstar(3, 18)

    def test_phi_b3(self):
        assert phi_B3(1, 3, 18).as_list() == [-12, 3, 82]
        assert b3_matrix(1, 3, 18) == [[0, 11, 6], [1, 10, 0], [1, 0, 2]]


@pytest.mark.parametrize(("delta", "n"), GRID)
def test_bstar_matches_assembled_quotient(delta, n):
    q = quotient(build_extremal(delta, n), three_blocks(extremal_spec(delta, n)))
    assert q.equitable
    assert characteristic_cubic(q) == phi_Bstar(delta, n)


@pytest.mark.parametrize(("s", "delta", "n"), CASE1)
def test_b2_matches_assembled_quotient(s, delta, n):
    q = quotient(build_case1(s, delta, n), three_blocks(case1_spec(s, delta, n)))
    assert q.to_rows() == b2_matrix(s, delta, n)
    assert characteristic_cubic(q) == phi_B2(s, delta, n)


@pytest.mark.parametrize(("s", "delta", "n"), CASE3)
def test_b3_matches_assembled_quotient(s, delta, n):
    q = quotient(build_case3(s, delta, n), three_blocks(case3_spec(s, delta, n)))
    assert q.equitable
    assert q.to_rows() == b3_matrix(s, delta, n)
    assert characteristic_cubic(q) == phi_B3(s, delta, n)


@pytest.mark.parametrize(
    ("phi", "graph"),
    [
        (phi_Bstar(3, 18), build_extremal(3, 18)),
        (phi_B2(5, 3, 25), build_case1(5, 3, 25)),
        (phi_B3(2, 4, 32), build_case3(2, 4, 32)),
    ],
)
def test_largest_root_is_graph_radius(phi, graph):
    assert largest_root(phi) == pytest.approx(spectral_radius(graph).value, abs=1e-8)


class TestAuxiliaryFunctions:
    @pytest.mark.parametrize(("s", "delta", "n"), CASE1[:6])
    def test_g_factors_the_difference(self, s, delta, n):
        for x in range(-5, 60, 7):
            difference = phi_B2(s, delta, n).evaluate(x) - phi_Bstar(delta, n).evaluate(x)
            assert difference == (s - delta) * eval_g(s, delta, n, x)

    @pytest.mark.parametrize(("s", "delta", "n"), CASE3)
    def test_h_factors_the_difference(self, s, delta, n):
        for x in range(-5, 60, 7):
            difference = phi_B3(s, delta, n).evaluate(x) - phi_Bstar(delta, n).evaluate(x)
            assert difference == (delta - s) * eval_h(s, delta, n, x)

    @pytest.mark.parametrize(("s", "delta", "n"), CASE3)
    def test_displayed_derivative(self, s, delta, n):
        phi = phi_B3(s, delta, n)
        for x in (0, 3, comparison_point(delta, n)):
            assert eval_phiB3_prime(s, delta, n, x) == phi.derivative(x)

    def test_known_values_at_comparison_point(self):
        x0 = comparison_point(3, 18)
        assert x0 == 13
        assert eval_g(4, 3, 18, x0) == 118
        assert eval_h(1, 3, 18, x0) == 163
        assert eval_phiB3_prime(1, 3, 18, x0) == 198


class TestClosedForms:
    @pytest.mark.parametrize(("s", "delta", "n"), CASE1)
    def test_g_closed(self, s, delta, n):
        x0 = comparison_point(delta, n)
        assert g_at_x0_closed(s, delta, n) == eval_g(s, delta, n, x0)

    @pytest.mark.parametrize(("s", "delta", "n"), CASE3)
    def test_case3_closed(self, s, delta, n):
        x0 = comparison_point(delta, n)
        assert h_at_x0_closed(s, delta, n) == eval_h(s, delta, n, x0)
        assert phiB3_prime_at_x0_closed(s, delta, n) == eval_phiB3_prime(s, delta, n, x0)

    @pytest.mark.parametrize(("delta", "n"), GRID)
    def test_g_at_smax(self, delta, n):
        assert g_at_smax(delta, n) == g_at_smax_closed(delta, n)

    def test_final_bounds_are_sharp_at_smallest_order(self):
        assert g_final_bound(3) == 2
        assert g_at_smax(3, 18) == Fraction(2)
        assert h_final_bound(1, 3) == 149
        assert phiB3_prime_final_bound(1) == 45

    @pytest.mark.parametrize("delta", [3, 4, 5, 6])
    def test_final_bounds_positive(self, delta):
        assert g_final_bound(delta) > 0
        for s in range(1, delta):
            assert h_final_bound(s, delta) > 0
            assert phiB3_prime_final_bound(s) > 0


def test_derivative_at_random_points():
    rng = SplitMix64(5)
    for s, delta, n in CASE3:
        phi = phi_B3(s, delta, n)
        for _ in range(100):
            x = rng.next_below(4001) - 2000
            assert eval_phiB3_prime(s, delta, n, x) == phi.derivative(x)


@pytest.mark.slow
@pytest.mark.parametrize(
    ("phi", "graph"),
    [(phi_Bstar(d, n), build_extremal(d, n)) for d, n in GRID]
    + [(phi_B2(s, d, n), build_case1(s, d, n)) for s, d, n in CASE1]
    + [(phi_B3(s, d, n), build_case3(s, d, n)) for s, d, n in CASE3],
)
def test_largest_root_is_graph_radius_on_grid(phi, graph):
    assert largest_root(phi) == pytest.approx(spectral_radius(graph).value, abs=1e-8)
