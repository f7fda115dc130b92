"""Spectral radius, quotient matrices, and cubic root extraction."""

from spectral_parity.spectra.cubic import CubicPoly, cubic_roots, largest_root
from spectral_parity.spectra.power import SpectralResult, spectral_radius
from spectral_parity.spectra.quotient import (
    QuotientDecomposition,
    characteristic_cubic,
    characteristic_polynomial,
    largest_eigenvalue_small,
    quotient,
)

__all__ = [
    "CubicPoly",
    "QuotientDecomposition",
    "SpectralResult",
    "characteristic_cubic",
    "characteristic_polynomial",
    "cubic_roots",
    "largest_eigenvalue_small",
    "largest_root",
    "quotient",
    "spectral_radius",
]
