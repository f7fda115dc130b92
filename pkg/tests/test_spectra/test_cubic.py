"""Tests for cubic root extraction."""

from fractions import Fraction

import numpy as np
import pytest

from spectral_parity.exceptions import ComplexRootsError
from spectral_parity.spectra.cubic import CubicPoly, cubic_roots, largest_root


def test_largest_root_of_extremal_cubic():
    assert largest_root(CubicPoly(-12, -25, 120)) == pytest.approx(13.2050370308, abs=1e-9)


def test_roots_sorted_descending():
    assert cubic_roots(CubicPoly(-6, 11, -6)) == pytest.approx((3.0, 2.0, 1.0), abs=1e-9)


@pytest.mark.parametrize(
    "coefficients", [(-12, -25, 120), (-11, -32, 160), (-12, 3, 82), (0, -1, 0)]
)
def test_roots_match_numpy(coefficients):
    expected = sorted(np.roots([1, *coefficients]).real, reverse=True)
    assert cubic_roots(CubicPoly(*coefficients)) == pytest.approx(tuple(expected), abs=1e-8)


def test_complex_pair_raises():
    with pytest.raises(ComplexRootsError) as excinfo:
        largest_root(CubicPoly(0, 1, 0))
    assert excinfo.value.discriminant < 0


def test_exact_evaluation():
    p = CubicPoly(-12, -25, 120)
    assert p.is_exact
    assert p.evaluate(13) == -36
    assert p.derivative(0) == -25
    assert CubicPoly(Fraction(6, 2), 0, 0).as_list() == [3, 0, 0]


def test_nonfinite_coefficient_rejected():
    with pytest.raises(ValueError, match="finite"):
        CubicPoly(float("nan"), 0, 0)
