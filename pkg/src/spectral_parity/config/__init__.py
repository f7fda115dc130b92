"""Configuration module for spectral-parity-factors."""

from .settings import Limits, Settings, Tolerances, load_settings, parse_settings

__all__ = ["Limits", "Settings", "Tolerances", "load_settings", "parse_settings"]
