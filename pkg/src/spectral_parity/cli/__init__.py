"""Command-line interface for spectral-parity-factors."""

from spectral_parity.cli.main import main

__all__ = ["main"]
