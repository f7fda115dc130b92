"""Tests for HarnessReport rows, comparators and output formats."""

import json
import math
from fractions import Fraction

import pyarrow.parquet as pq
import pytest

from spectral_parity.config.settings import Tolerances
from spectral_parity.harness.report import (
    CSV_COLUMNS,
    REPORT_SCHEMA,
    HarnessReport,
    evaluate,
    format_number,
    format_set,
    lookup_check,
)

TOL = Tolerances()


class TestComparators:
    @pytest.mark.parametrize(
        ("comparator", "lhs", "rhs", "expected"),
        [
            ("lt", 1.0, 2.0, True),
            ("lt", 1.0, 1.0 + 5e-7, False),  # inside the strict margin
            ("gt", 2.0, 1.0, True),
            ("gt", 1.0 + 5e-7, 1.0, False),
            ("le", 1.0 + 5e-10, 1.0, True),  # inside the slack
            ("le", 1.0 + 1e-6, 1.0, False),
            ("ge", 1.0 - 5e-10, 1.0, True),
            ("eq", 1.0, 1.0 + 5e-9, True),
            ("eq", 1.0, 1.0 + 1e-7, False),
        ],
    )
    def test_margins(self, comparator, lhs, rhs, expected):
        assert evaluate(comparator, lhs, rhs, TOL) is expected

    def test_nan_never_passes(self):
        for comparator in ("lt", "gt", "le", "ge", "eq"):
            assert not evaluate(comparator, math.nan, 0.0, TOL)

    def test_info_always_passes(self):
        assert evaluate("info", math.nan, 1.0, TOL)

    def test_unknown_comparator(self):
        with pytest.raises(ValueError, match="Unknown comparator"):
            evaluate("ne", 1.0, 2.0, TOL)


class TestLookup:
    def test_exact_and_glob(self):
        assert lookup_check("eq3.3").comparator == "le"
        assert lookup_check("scan-n7").comparator == "eq"
        assert lookup_check("sharpness-margin").comparator == "info"

    def test_unknown(self):
        with pytest.raises(KeyError, match="Unknown check id"):
            lookup_check("eq9.9")


class TestHarnessReport:
    def test_add_computes_passed(self):
        report = HarnessReport()
        row = report.add("eq3.5", Fraction(13), 13.205, delta=3, n=18)
        assert row["passed"]
        assert row["lhs"] == 13.0
        assert report.add("eq3.5", 14, 13.205)["passed"] is False
        assert report.failed_count == 1
        assert len(report) == 2

    def test_unknown_check_rejected(self):
        with pytest.raises(KeyError):
            HarnessReport().add("no-such-check", 0, 0)

    def test_sorted_output_ignores_insertion_order(self, sample_report):
        ids = [row["check_id"] for row in sample_report.sorted_rows()]
        assert ids == ["eq3.3", "eq3.6", "scan-discrepancy"]
        assert [row["check_id"] for row in sample_report.failed_rows()] == ["scan-discrepancy"]
        assert not sample_report.all_passed

    def test_merge(self, sample_report):
        other = HarnessReport()
        other.add("case2", 1.0, 1.0, delta=3, n=18, s=3)
        assert len(other.merge(sample_report)) == 4

    def test_audit_is_clean(self, sample_report):
        assert sample_report.audit() == []

    def test_audit_finds_tampered_rows(self, sample_report):
        sample_report.rows[0]["passed"] = not sample_report.rows[0]["passed"]
        sample_report.rows.append({**sample_report.rows[1], "check_id": "bogus"})
        findings = sample_report.audit()
        assert len(findings) == 2
        assert any("bogus" in finding for finding in findings)
        assert any("eq3.6" in finding and "gt gives True" in finding for finding in findings)


class TestOutputFormats:
    def test_csv(self, sample_report):
        assert sample_report.to_csv() == (
            ",".join(CSV_COLUMNS)
            + "\n"
            + "eq3.3,3,18,4,,3,8,true,\n"
            + "eq3.6,3,18,4,,12.5,0,true,\n"
            + "scan-discrepancy,,4,,,1,0,false,C~\n"
        )

    def test_jsonl(self, sample_report):
        lines = sample_report.to_jsonl().splitlines()
        assert len(lines) == 3
        assert json.loads(lines[0]) == {
            "check_id": "eq3.3",
            "delta": 3,
            "n": 18,
            "s": 4,
            "seed": None,
            "lhs": 3.0,
            "rhs": 8.0,
            "passed": True,
            "witness": None,
        }

    def test_text(self, sample_report):
        lines = sample_report.to_text().splitlines()
        assert lines[0].split() == CSV_COLUMNS
        assert lines[-1] == "3 rows, 1 failed"

    def test_render(self, sample_report):
        assert sample_report.render("csv") == sample_report.to_csv()
        with pytest.raises(ValueError, match="Unknown output format"):
            sample_report.render("xml")

    def test_arrow_round_trip(self, sample_report):
        table = sample_report.to_arrow()
        assert table.schema == REPORT_SCHEMA
        assert table.num_rows == 3
        restored = HarnessReport.from_arrow(table)
        assert restored.sorted_rows() == sample_report.sorted_rows()

    def test_parquet(self, sample_report, tmp_path):
        path = sample_report.write_parquet(tmp_path / "report.parquet")
        table = pq.read_table(path)
        assert table.column("check_id").to_pylist() == ["eq3.3", "eq3.6", "scan-discrepancy"]

    def test_parquet_failure_wrapped(self, sample_report, tmp_path):
        with pytest.raises(RuntimeError, match="Failed to write Parquet"):
            sample_report.write_parquet(tmp_path / "missing" / "report.parquet")


def test_formatting_helpers():
    assert format_set(0b0101) == "{0,2}"
    assert format_set(0) == "{}"
    assert format_number(None) == ""
    assert format_number(13.205037030837) == "13.2050370308"
