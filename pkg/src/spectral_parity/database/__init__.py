"""DuckDB report store for verification campaigns."""

from spectral_parity.database.report_store import ReportStore
from spectral_parity.database.schema import create_schema

__all__ = ["ReportStore", "create_schema"]
