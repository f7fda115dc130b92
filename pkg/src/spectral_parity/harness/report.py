"""Self-auditing report rows for verification campaigns.

Every row carries lhs, rhs and a check id; the comparator comes from the
CHECKS registry, so `passed` can always be recomputed from the row alone.
Output formats: CSV, JSON lines, aligned text, Arrow table, Parquet file.

See: docs/architecture/decisions/0003-report-storage-duckdb-arrow.md
"""

from __future__ import annotations

import csv
import fnmatch
import io
import json
import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Literal, TypedDict

import pyarrow as pa  # ADR-0003: columnar export
import pyarrow.parquet as pq

from spectral_parity.config.settings import Tolerances, load_settings
from spectral_parity.graphs.graph import VertexSet, members

logger = logging.getLogger(__name__)

Comparator = Literal["lt", "gt", "le", "ge", "eq", "info"]

CSV_COLUMNS = ["check_id", "delta", "n", "s", "seed", "lhs", "rhs", "passed", "witness"]


class ReportRow(TypedDict):
    """One verified instance."""

    check_id: str
    delta: int | None
    n: int | None
    s: int | None
    seed: int | None
    lhs: float
    rhs: float
    passed: bool
    witness: str | None


@dataclass(frozen=True)
class Check:
    comparator: Comparator
    description: str


# Exact ids first; glob patterns cover per-order scan rows.
CHECKS: dict[str, Check] = {
    # extremal identities and spectral cross-checks
    "eq3.4-identity": Check("eq", "phi_Bstar vs char-poly of quotient(G*), mismatched coefficients"),
    "gstar-equitable": Check("eq", "canonical partition of G* is equitable"),
    "gstar-rho-graph": Check("eq", "rho(G*) from power iteration vs eta*"),
    "eq3.5": Check("lt", "x0 = n - delta(delta-2) - 2 < eta*"),
    # Case 1: s >= delta+1
    "case1-charpoly": Check("eq", "phi_B2 vs char-poly of quotient(G2), mismatched coefficients"),
    "case1-rho-graph": Check("eq", "rho(G2) from power iteration vs largest root of phi_B2"),
    "eq3.1": Check("lt", "rho(G1 minus an edge) < rho(G1)"),
    "eq3.2": Check("le", "rho(G1) <= rho(G2) for the most balanced partition"),
    "eq3.3": Check("le", "theta2(B2) <= n - (delta-1)s - 2"),
    "eq3.3-chain": Check("le", "n - (delta-1)s - 2 <= n - delta^2 - 1"),
    "eq3.5-gap": Check("lt", "theta2(B2) < eta*"),
    "eq3.6-identity": Check("eq", "phi_B2(x0) - phi_Bstar(x0) = (s-delta) g(x0)"),
    "eq3.6": Check("gt", "phi_B2(eta*) > 0"),
    "eq3.7": Check("gt", "g(eta*) > 0"),
    "eq3.7-axis": Check("lt", "vertex of g < x0"),
    "eq3.7-monotone": Check("gt", "g(eta*) > g(x0)"),
    "eq3.7-closed": Check("eq", "expanded g(x0) equals direct evaluation"),
    "eq3.7-smax": Check("ge", "g(x0) >= g(x0) at s = (n-2)/(delta-1)"),
    "eq3.7-smax-closed": Check("eq", "expanded g(x0) at s = (n-2)/(delta-1)"),
    "eq3.7-nmin": Check("ge", "bound at n >= its value at n = 2 delta^2"),
    "eq3.7-final": Check("eq", "value at n = 2 delta^2 equals the closed bound in delta"),
    "eq3.7-bound-positive": Check("gt", "closed bound in delta > 0"),
    "case1-rho": Check("lt", "rho(G2) < eta*"),
    # Case 2: s = delta
    "case2": Check("eq", "rho(G2 at s = delta) = eta*"),
    "case2-identity": Check("eq", "phi_B2(delta, delta, n) vs phi_Bstar, mismatched coefficients"),
    # Case 3: 1 <= s <= delta-1
    "case3-charpoly": Check("eq", "phi_B3 vs char-poly of quotient(G3), mismatched coefficients"),
    "case3-rho-graph": Check("eq", "rho(G3) from power iteration vs largest root of phi_B3"),
    "eq3.8": Check("le", "rho(G1) <= rho(G3) for the most balanced admissible partition"),
    "eq3.9-identity": Check("eq", "phi_B3(x0) - phi_Bstar(x0) = (delta-s) h(x0)"),
    "eq3.9": Check("gt", "h(eta*) > 0"),
    "eq3.9-axis": Check("lt", "vertex of h < x0 (s >= 2)"),
    "eq3.9-monotone": Check("gt", "h(eta*) > h(x0)"),
    "eq3.9-closed": Check("eq", "expanded h(x0) equals direct evaluation"),
    "eq3.9-naxis": Check("lt", "vertex in n of expanded h(x0) < 2 delta^2"),
    "eq3.9-nmin": Check("ge", "expanded h(x0) at n >= its value at n = 2 delta^2"),
    "eq3.9-final": Check("ge", "value at n = 2 delta^2 >= closed bound in (s, delta)"),
    "eq3.9-bound-positive": Check("gt", "closed bound in (s, delta) > 0"),
    "eq3.10": Check("gt", "phi_B3(eta*) > 0"),
    "eq3.11": Check("gt", "phi_B3'(x) > 0 at sampled x > x0"),
    "eq3.11-axis": Check("lt", "vertex of phi_B3' < x0"),
    "eq3.11-derivative": Check("eq", "displayed phi_B3'(x0) equals the analytic derivative"),
    "eq3.11-closed": Check("eq", "expanded phi_B3'(x0) equals direct evaluation"),
    "eq3.11-nmin": Check("ge", "expanded phi_B3'(x0) at n >= its value at n = 2 delta^2"),
    "eq3.11-final": Check("ge", "value at n = 2 delta^2 >= 3s^4 + 10s^3 + 10s^2 + 18s + 4"),
    "case3-rho": Check("lt", "rho(G3) < eta*"),
    # clique-partition comparison
    "lemma2.3": Check("le", "rho(K_s v union of cliques) <= rho(extremal partition)"),
    "lemma2.3-equality": Check("eq", "extremal partition attains equality"),
    "lemma2.3-near": Check("info", "non-extremal partition within equality tolerance"),
    # randomized theorem check
    "thm1.1": Check("eq", "criterion reports a strong parity factor (1 = yes)"),
    "thm1.1-below": Check("info", "rho(G) below rho(G*) threshold"),
    "thm1.1-extremal": Check("info", "sample matched G* by fingerprint and isomorphism"),
    "thm1.1-rejected": Check("info", "sample rejected by the generator hypotheses"),
    "thm1.1-hit-rate": Check("info", "samples reaching the rho threshold / samples"),
    "thm1.1-counterexamples": Check("eq", "counterexamples found"),
    "thm1.1-control-dense": Check("eq", "K_n passes the criterion (1 = yes)"),
    "thm1.1-control-sparse": Check("lt", "C_n minimum degree below delta"),
    # criterion vs oracle scan
    "scan-discrepancy": Check("eq", "criterion verdict vs oracle verdict (1 = has factor)"),
    "scan-skip": Check("info", "graph above the oracle budget, not compared"),
    "scan-total": Check("eq", "discrepancies over every order"),
    "scan-n*": Check("eq", "discrepancies among connected graphs of this order"),
    # sharpness probe: records only
    "sharpness-*": Check("info", "sharpness probe finding"),
}


def lookup_check(check_id: str) -> Check:
    """
    Registry entry for a check id (exact match first, then glob patterns).

    Raises:
        KeyError: If no entry matches
    """
    if check_id in CHECKS:
        return CHECKS[check_id]
    for pattern, check in CHECKS.items():
        if "*" in pattern and fnmatch.fnmatchcase(check_id, pattern):
            return check
    raise KeyError(f"Unknown check id: {check_id!r}")


def evaluate(comparator: Comparator, lhs: float, rhs: float, tolerances: Tolerances) -> bool:
    """Apply a comparator with the configured margin, slack or equality tolerance."""
    if comparator == "info":
        return True
    if math.isnan(lhs) or math.isnan(rhs):
        return False
    if comparator == "lt":
        return lhs < rhs - tolerances.strict_margin
    if comparator == "gt":
        return lhs > rhs + tolerances.strict_margin
    if comparator == "le":
        return lhs <= rhs + tolerances.slack
    if comparator == "ge":
        return lhs >= rhs - tolerances.slack
    if comparator == "eq":
        return abs(lhs - rhs) <= tolerances.equality
    raise ValueError(f"Unknown comparator: {comparator!r}")


def format_set(mask: VertexSet) -> str:
    """Vertex set as '{0,2}'."""
    return "{" + ",".join(str(v) for v in members(mask)) + "}"


def format_number(value: float | None) -> str:
    """12 significant digits; empty string for None."""
    if value is None:
        return ""
    return f"{value:.12g}"


def _sort_key(row: ReportRow) -> tuple:
    def key(value: int | None) -> tuple[int, int]:
        return (0, 0) if value is None else (1, value)

    return (
        row["check_id"],
        key(row["delta"]),
        key(row["n"]),
        key(row["s"]),
        key(row["seed"]),
        row["witness"] or "",
        row["lhs"],
        row["rhs"],
    )


class HarnessReport:
    """
    Accumulator of ReportRows.

    Rows may be added in any order (campaign workers finish out of order);
    every output method sorts by (check_id, delta, n, s, seed, witness) first.
    """

    def __init__(self, tolerances: Tolerances | None = None) -> None:
        self.tolerances = tolerances or load_settings().tolerances
        self.rows: list[ReportRow] = []

    def add(
        self,
        check_id: str,
        lhs: float | int | Fraction | bool,
        rhs: float | int | Fraction | bool,
        *,
        delta: int | None = None,
        n: int | None = None,
        s: int | None = None,
        seed: int | None = None,
        witness: str | None = None,
    ) -> ReportRow:
        """
        Record one instance; passed is computed from the registry comparator.

        Raises:
            KeyError: If check_id is not registered
        """
        check = lookup_check(check_id)
        lhs_value, rhs_value = float(lhs), float(rhs)
        row: ReportRow = {
            "check_id": check_id,
            "delta": delta,
            "n": n,
            "s": s,
            "seed": seed,
            "lhs": lhs_value,
            "rhs": rhs_value,
            "passed": evaluate(check.comparator, lhs_value, rhs_value, self.tolerances),
            "witness": witness,
        }
        self.rows.append(row)
        if row["passed"]:
            logger.debug(f"✓ {check_id} (delta={delta}, n={n}, s={s}): {lhs_value:.12g} vs {rhs_value:.12g}")
        else:
            logger.debug(f"✗ {check_id} (delta={delta}, n={n}, s={s}): {lhs_value:.12g} vs {rhs_value:.12g}")
        return row

    def extend(self, rows: Iterable[ReportRow]) -> None:
        self.rows.extend(rows)

    def merge(self, other: HarnessReport) -> HarnessReport:
        self.rows.extend(other.rows)
        return self

    def sorted_rows(self) -> list[ReportRow]:
        return sorted(self.rows, key=_sort_key)

    def failed_rows(self) -> list[ReportRow]:
        return [row for row in self.sorted_rows() if not row["passed"]]

    @property
    def failed_count(self) -> int:
        return sum(1 for row in self.rows if not row["passed"])

    @property
    def all_passed(self) -> bool:
        return self.failed_count == 0

    def __len__(self) -> int:
        return len(self.rows)

    def audit(self) -> list[str]:
        """
        Recompute every passed flag from (lhs, rhs, comparator).

        Returns:
            List of findings (empty list = report is consistent)
        """
        findings = []
        for row in self.sorted_rows():
            try:
                check = lookup_check(row["check_id"])
            except KeyError as e:
                findings.append(str(e))
                continue
            expected = evaluate(check.comparator, row["lhs"], row["rhs"], self.tolerances)
            if expected != row["passed"]:
                findings.append(
                    f"{row['check_id']} (delta={row['delta']}, n={row['n']}, s={row['s']}): "
                    f"passed={row['passed']} but {check.comparator} gives {expected}"
                )
        return findings

    # --- output ---------------------------------------------------------------

    def _cells(self, row: ReportRow) -> list[str]:
        return [
            row["check_id"],
            "" if row["delta"] is None else str(row["delta"]),
            "" if row["n"] is None else str(row["n"]),
            "" if row["s"] is None else str(row["s"]),
            "" if row["seed"] is None else str(row["seed"]),
            format_number(row["lhs"]),
            format_number(row["rhs"]),
            "true" if row["passed"] else "false",
            row["witness"] or "",
        ]

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in self.sorted_rows():
            writer.writerow(self._cells(row))
        return buffer.getvalue()

    def to_jsonl(self) -> str:
        lines = []
        for row in self.sorted_rows():
            record = dict(row)
            record["lhs"] = float(format_number(row["lhs"]))
            record["rhs"] = float(format_number(row["rhs"]))
            lines.append(json.dumps(record, separators=(",", ":")))
        return "".join(line + "\n" for line in lines)

    def to_text(self) -> str:
        """Aligned table for terminals, with a trailing summary line."""
        table = [CSV_COLUMNS] + [self._cells(row) for row in self.sorted_rows()]
        widths = [max(len(r[i]) for r in table) for i in range(len(CSV_COLUMNS))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths, strict=True)).rstrip() for r in table]
        lines.append(f"{len(self.rows)} rows, {self.failed_count} failed")
        return "\n".join(lines) + "\n"

    def render(self, output: Literal["csv", "json", "text"]) -> str:
        if output == "csv":
            return self.to_csv()
        if output == "json":
            return self.to_jsonl()
        if output == "text":
            return self.to_text()
        raise ValueError(f"Unknown output format: {output!r}. Must be 'csv', 'json' or 'text'")

    def to_arrow(self) -> pa.Table:
        """Rows as a pyarrow Table with a fixed schema."""
        rows = self.sorted_rows()
        return pa.Table.from_pylist(rows, schema=REPORT_SCHEMA)

    def write_parquet(self, path: Path | str) -> Path:
        """
        Write the report to a Parquet file.

        Raises:
            RuntimeError: If pyarrow cannot write the file
        """
        path = Path(path)
        try:
            pq.write_table(self.to_arrow(), path)
        except (OSError, pa.ArrowException) as e:
            raise RuntimeError(f"Failed to write Parquet report to {path}: {e}") from e
        logger.info(f"Wrote {len(self.rows)} rows to {path}")
        return path

    @classmethod
    def from_arrow(cls, table: pa.Table, tolerances: Tolerances | None = None) -> HarnessReport:
        report = cls(tolerances)
        for record in table.select(CSV_COLUMNS).to_pylist():
            report.rows.append(record)  # type: ignore[arg-type]
        return report


REPORT_SCHEMA = pa.schema(
    [
        ("check_id", pa.string()),
        ("delta", pa.int64()),
        ("n", pa.int64()),
        ("s", pa.int64()),
        ("seed", pa.uint64()),
        ("lhs", pa.float64()),
        ("rhs", pa.float64()),
        ("passed", pa.bool_()),
        ("witness", pa.string()),
    ]
)
