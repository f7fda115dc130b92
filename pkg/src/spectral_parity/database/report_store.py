"""DuckDB-backed storage for campaign reports."""

from __future__ import annotations

import logging
import uuid
from pathlib import Path
from typing import Any

import duckdb
import pyarrow as pa

from spectral_parity.database.schema import create_schema
from spectral_parity.harness.report import CSV_COLUMNS, HarnessReport

logger = logging.getLogger(__name__)

DEFAULT_STORE_PATH = Path.home() / ".cache" / "spectral-parity" / "reports.duckdb"

ROW_COLUMNS = ["run_id", "campaign", *CSV_COLUMNS]


class ReportStore:
    """
    Campaign rows and per-run summaries in a DuckDB file.

    Database location: ~/.cache/spectral-parity/reports.duckdb unless a path is given

    See: docs/architecture/decisions/0003-report-storage-duckdb-arrow.md
    """

    def __init__(self, db_path: Path | str | None = None) -> None:
        """
        Open (or create) the store and its schema.

        Args:
            db_path: Database file (default: ~/.cache/spectral-parity/reports.duckdb)

        Raises:
            RuntimeError: If the database cannot be opened (ADR-0002: strict raise policy)
        """
        if db_path is None:
            DEFAULT_STORE_PATH.parent.mkdir(parents=True, exist_ok=True)
            db_path = DEFAULT_STORE_PATH
        self.db_path = Path(db_path)
        try:
            self.conn = duckdb.connect(str(self.db_path))
            create_schema(self.conn)
        except duckdb.Error as e:
            raise RuntimeError(f"Failed to open report store {self.db_path}: {e}") from e

    def insert_report(
        self, report: HarnessReport, campaign: str, run_id: str | None = None
    ) -> str:
        """
        Store every row of a report in one statement and refresh its run summary.

        Args:
            report: Rows to store
            campaign: Campaign name (e.g. "verify-lemmas", "scan")
            run_id: Identifier for this run (default: random hex id)

        Returns:
            The run_id the rows were stored under

        Raises:
            RuntimeError: On database error (ADR-0002: strict raise policy)

        Example:
            >>> with ReportStore(tmp_path / "reports.duckdb") as store:
            ...     run_id = store.insert_report(report, "verify-lemmas")
            ...     store.run_summaries()[0]["failed_rows"]
            0
        """
        run_id = run_id or uuid.uuid4().hex
        table = report.to_arrow()
        size = table.num_rows
        table = table.add_column(0, "campaign", pa.array([campaign] * size, pa.string()))
        table = table.add_column(0, "run_id", pa.array([run_id] * size, pa.string()))

        try:
            self.conn.register("incoming_rows", table)
            self.conn.execute(
                f"INSERT INTO harness_rows ({', '.join(ROW_COLUMNS)}) "
                f"SELECT {', '.join(ROW_COLUMNS)} FROM incoming_rows"
            )
            self.conn.unregister("incoming_rows")
            self.refresh_run_summary(run_id, campaign)
        except duckdb.Error as e:
            raise RuntimeError(
                f"Failed to store {size} rows for campaign {campaign} (run {run_id}): {e}"
            ) from e

        logger.info(f"Stored {size} rows for {campaign} (run {run_id}) in {self.db_path}")
        return run_id

    def refresh_run_summary(self, run_id: str, campaign: str) -> None:
        """
        Recompute the campaign_runs row of one run.

        Raises:
            RuntimeError: On refresh error (ADR-0002: strict raise policy)
        """
        try:
            self.conn.execute(
                """
                INSERT OR REPLACE INTO campaign_runs
                SELECT
                    ? AS run_id,
                    ? AS campaign,
                    COUNT(*) AS total_rows,
                    COALESCE(SUM(CASE WHEN NOT passed THEN 1 ELSE 0 END), 0) AS failed_rows,
                    CURRENT_TIMESTAMP AS recorded_at
                FROM harness_rows
                WHERE run_id = ?
                """,
                [run_id, campaign, run_id],
            )
        except duckdb.Error as e:
            raise RuntimeError(f"Failed to refresh run summary for {run_id}: {e}") from e

    def query(self, sql: str, params: list[Any] | None = None) -> list[tuple]:
        """
        Execute arbitrary SQL query.

        Raises:
            RuntimeError: On query execution error (ADR-0002: strict raise policy)
        """
        try:
            return self.conn.execute(sql, params or []).fetchall()
        except duckdb.Error as e:
            raise RuntimeError(f"Query execution failed: {e}") from e

    def rows(
        self,
        run_id: str | None = None,
        check_id: str | None = None,
        failed_only: bool = False,
    ) -> list[dict[str, Any]]:
        """
        Stored rows as dicts, ordered like report output.

        Query:
            SELECT ... FROM harness_rows WHERE <filters>
            ORDER BY run_id, check_id, delta, n, s, seed, witness
        """
        conditions, params = [], []
        if run_id is not None:
            conditions.append("run_id = ?")
            params.append(run_id)
        if check_id is not None:
            conditions.append("check_id = ?")
            params.append(check_id)
        if failed_only:
            conditions.append("NOT passed")
        where = f"WHERE {' AND '.join(conditions)}" if conditions else ""
        records = self.query(
            f"""
            SELECT {", ".join(ROW_COLUMNS)}
            FROM harness_rows
            {where}
            ORDER BY run_id, check_id, delta NULLS FIRST, n NULLS FIRST, s NULLS FIRST,
                     seed NULLS FIRST, witness NULLS FIRST
            """,
            params,
        )
        return [dict(zip(ROW_COLUMNS, record, strict=True)) for record in records]

    def failed_rows(self, run_id: str | None = None) -> list[dict[str, Any]]:
        return self.rows(run_id=run_id, failed_only=True)

    def run_summaries(self) -> list[dict[str, Any]]:
        """Per-run totals, most recent first."""
        records = self.query(
            """
            SELECT run_id, campaign, total_rows, failed_rows, recorded_at
            FROM campaign_runs
            ORDER BY recorded_at DESC, run_id
            """
        )
        columns = ["run_id", "campaign", "total_rows", "failed_rows", "recorded_at"]
        return [dict(zip(columns, record, strict=True)) for record in records]

    def load_report(self, run_id: str) -> HarnessReport:
        """
        Rebuild the HarnessReport of one run.

        Raises:
            RuntimeError: On query error or an unknown run_id
        """
        try:
            table = self.conn.execute(
                f"SELECT {', '.join(CSV_COLUMNS)} FROM harness_rows WHERE run_id = ?", [run_id]
            ).fetch_arrow_table()
        except duckdb.Error as e:
            raise RuntimeError(f"Failed to load run {run_id}: {e}") from e
        if table.num_rows == 0:
            raise RuntimeError(f"No rows stored for run {run_id}")
        return HarnessReport.from_arrow(table)

    def close(self) -> None:
        """Commit pending writes and close the connection."""
        if self.conn:
            self.conn.commit()
            self.conn.close()

    def __enter__(self) -> ReportStore:
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        self.close()
