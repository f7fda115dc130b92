"""Report store schema definition and creation.

See: docs/architecture/decisions/0003-report-storage-duckdb-arrow.md
"""

import duckdb


def create_schema(conn: duckdb.DuckDBPyConnection) -> None:
    """
    Create the harness_rows and campaign_runs tables and indexes.

    Args:
        conn: DuckDB connection

    Schema:
        - harness_rows: one row per report row, tagged with run_id and campaign
          (no primary key: sampled rows may repeat (check_id, params) across runs)
        - campaign_runs: per-run summary, primary key run_id
        - Indexes:
            - idx_rows_run_check: Fast per-run, per-check lookups
            - idx_rows_passed: Fast failed-row queries
    """
    conn.execute("""
        CREATE TABLE IF NOT EXISTS harness_rows (
            run_id VARCHAR NOT NULL,
            campaign VARCHAR NOT NULL USING COMPRESSION dictionary,
            check_id VARCHAR NOT NULL USING COMPRESSION dictionary,
            delta BIGINT,
            n BIGINT,
            s BIGINT,
            seed UBIGINT,
            lhs DOUBLE NOT NULL,
            rhs DOUBLE NOT NULL,
            passed BOOLEAN NOT NULL,
            witness VARCHAR
        )
    """)

    conn.execute("""
        CREATE INDEX IF NOT EXISTS idx_rows_run_check
        ON harness_rows(run_id, check_id)
    """)

    conn.execute("""
        CREATE INDEX IF NOT EXISTS idx_rows_passed
        ON harness_rows(passed, check_id)
    """)

    # Summary table, refreshed after each insert_report()
    conn.execute("""
        CREATE TABLE IF NOT EXISTS campaign_runs (
            run_id VARCHAR PRIMARY KEY,
            campaign VARCHAR NOT NULL,
            total_rows BIGINT NOT NULL,
            failed_rows BIGINT NOT NULL,
            recorded_at TIMESTAMP NOT NULL
        )
    """)
