"""Tests for the spectral-parity command-line interface."""
