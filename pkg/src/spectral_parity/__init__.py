"""Spectral Parity Factors - verification toolkit for a spectral radius condition.

Decides strong-parity-factor existence on small graphs (subset criterion and
definitional oracle), builds the extremal join-of-cliques families with their
closed-form quotient polynomials, and runs self-auditing verification campaigns.

Example:
    >>> from spectral_parity import build_extremal, criterion_check, spectral_radius
    >>> G = build_extremal(3, 18)
    >>> round(spectral_radius(G).value, 4)
    13.205
"""

from spectral_parity.__version__ import __version__
from spectral_parity.extremal.families import build_case1, build_case3, build_extremal
from spectral_parity.extremal.polynomials import phi_B2, phi_B3, phi_Bstar
from spectral_parity.graphs.graph import Graph
from spectral_parity.graphs.io import parse_graph, serialize_graph
from spectral_parity.harness.report import HarnessReport
from spectral_parity.parity.criterion import criterion_check
from spectral_parity.parity.oracle import find_parity_factor, oracle_check
from spectral_parity.spectra.power import spectral_radius

__all__ = [
    "Graph",
    "HarnessReport",
    "__version__",
    "build_case1",
    "build_case3",
    "build_extremal",
    "criterion_check",
    "find_parity_factor",
    "oracle_check",
    "parse_graph",
    "phi_B2",
    "phi_B3",
    "phi_Bstar",
    "serialize_graph",
    "spectral_radius",
]
