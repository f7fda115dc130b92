"""Pytest fixtures and configuration for spectral-parity-factors tests.

Test organization:
    - Unit tests: Fast, exact identities and small graphs
    - Campaign tests: Full-size verification runs, marked with @pytest.mark.slow

Coverage target: 80%+ (pyproject.toml: --cov-fail-under=80)
"""

from pathlib import Path

import pytest

from spectral_parity.database.report_store import ReportStore
from spectral_parity.graphs.graph import Graph, complete, cycle, star
from spectral_parity.harness.report import HarnessReport


@pytest.fixture
def temp_db_path(tmp_path: Path) -> Path:
    """
    Create temporary database path for tests.

    Returns:
        Path to temporary .duckdb file (file not created, only path)
    """
    return tmp_path / "reports.duckdb"


@pytest.fixture
def store(temp_db_path: Path) -> ReportStore:
    """
    Create test report store with schema.

    Returns:
        ReportStore instance with temp database
    """
    return ReportStore(db_path=temp_db_path)


@pytest.fixture
def k2() -> Graph:
    return complete(2)


@pytest.fixture
def c4() -> Graph:
    return cycle(4)


@pytest.fixture
def claw() -> Graph:
    """K_{1,3} with the center at vertex 0."""
    return star(3)


@pytest.fixture
def k4() -> Graph:
    return complete(4)


@pytest.fixture
def sample_report() -> HarnessReport:
    """
    Small report with one failed row.

    Rows:
        - eq3.6 (delta=3, n=18, s=4): passes
        - eq3.3 (delta=3, n=18, s=4): passes
        - scan-discrepancy (n=4): fails (criterion 1 vs oracle 0)
    """
    report = HarnessReport()
    report.add("eq3.6", 12.5, 0, delta=3, n=18, s=4)
    report.add("eq3.3", 3.0, 8, delta=3, n=18, s=4)
    report.add("scan-discrepancy", 1, 0, n=4, witness="C~")
    return report
