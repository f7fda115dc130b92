"""Packaged default configuration (campaigns.json)."""
