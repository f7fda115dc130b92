"""CLI tests.

Test coverage:
- Smoke: help, version and a missing command through `python -m`
- Single-graph commands: rho, check, factor, extremal
- Campaign commands with report persistence, and history over the store
- Exit codes: 0 all passed, 1 failed rows, 2 usage/parse/size errors
"""

import io
import json
import subprocess
import sys

import pytest

from spectral_parity.cli.main import main
from spectral_parity.database.report_store import ReportStore
from spectral_parity.extremal.families import build_extremal
from spectral_parity.graphs.graph import complete, cycle
from spectral_parity.graphs.io import format_edge_list, format_graph6, parse_graph6
from spectral_parity.harness.report import HarnessReport


@pytest.fixture
def graph_file(tmp_path):
    def write(G, name="graph.txt"):
        path = tmp_path / name
        path.write_text(format_edge_list(G) + "\n")
        return str(path)

    return write


class TestCLISmoke:
    """Smoke tests for CLI entry point."""

    def test_help_flag_exits_zero(self):
        result = subprocess.run(
            [sys.executable, "-m", "spectral_parity.cli.main", "--help"],
            capture_output=True,
            text=True,
        )

        assert result.returncode == 0
        assert "spectral-parity" in result.stdout
        assert "Available commands" in result.stdout

    def test_version_flag_exits_zero(self):
        result = subprocess.run(
            [sys.executable, "-m", "spectral_parity.cli.main", "--version"],
            capture_output=True,
            text=True,
        )

        assert result.returncode == 0
        assert result.stdout.startswith("spectral-parity ")

    def test_no_command_exits_usage(self):
        result = subprocess.run(
            [sys.executable, "-m", "spectral_parity.cli.main"],
            capture_output=True,
            text=True,
        )

        assert result.returncode == 2
        assert "Available commands" in result.stderr
        assert result.stdout == ""

    def test_unknown_flag(self):
        assert main(["rho", "--bogus"]) == 2


class TestRho:
    def test_text(self, graph_file, capsys):
        assert main(["rho", graph_file(complete(5))]) == 0
        assert float(capsys.readouterr().out) == pytest.approx(4.0, abs=1e-9)

    def test_json(self, graph_file, capsys):
        assert main(["rho", graph_file(complete(5)), "--output", "json"]) == 0
        record = json.loads(capsys.readouterr().out)
        assert record["order"] == 5
        assert record["rho"] == pytest.approx(4.0, abs=1e-9)

    def test_stdin_graph6(self, monkeypatch, capsys):
        monkeypatch.setattr("sys.stdin", io.StringIO("C~\n"))
        assert main(["rho", "-", "--format", "graph6"]) == 0
        assert float(capsys.readouterr().out) == pytest.approx(3.0, abs=1e-9)

    def test_missing_file(self, tmp_path):
        assert main(["rho", str(tmp_path / "nope.txt")]) == 2

    def test_malformed_file(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("3 1\n0 0\n")
        assert main(["rho", str(path)]) == 2
        assert capsys.readouterr().out == ""

    def test_oversized_order_is_input_error(self, tmp_path):
        path = tmp_path / "huge.txt"
        path.write_text("10000000000 0\n")
        assert main(["rho", str(path)]) == 2


class TestCheck:
    def test_c4_both_methods(self, graph_file, capsys):
        assert main(["check", graph_file(cycle(4)), "--method", "both"]) == 1
        lines = capsys.readouterr().out.splitlines()
        criterion, oracle = (json.loads(line) for line in lines)
        assert criterion["method"] == "criterion"
        assert criterion["witness"] == [0, 2]
        assert criterion["detail"] == {"components": 2, "degree_sum": 4, "size": 2}
        assert oracle["method"] == "oracle"
        assert oracle["witness"] == [0, 2]

    def test_k4_text(self, graph_file, capsys):
        assert main(["check", graph_file(complete(4)), "--output", "text"]) == 0
        assert capsys.readouterr().out == "criterion: strong parity factor exists\n"

    def test_search_strategy_csv(self, graph_file, capsys):
        path = graph_file(cycle(4))
        assert main(["check", path, "--method", "oracle", "--strategy", "search", "--output", "csv"]) == 1
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "has_spf,method,witness,detail"
        assert out[1].startswith("False,oracle,")

    def test_oracle_budget(self, graph_file):
        assert main(["check", graph_file(complete(13)), "--method", "oracle"]) == 2


class TestFactor:
    def test_found(self, graph_file, capsys):
        assert main(["factor", graph_file(cycle(4)), "--demand", "0,1"]) == 0
        record = json.loads(capsys.readouterr().out)
        assert record == {
            "demand": [0, 1],
            "found": True,
            "edges": [[0, 3], [1, 2], [2, 3]],
            "degrees": [1, 1, 2, 2],
        }

    def test_text_lists_edges(self, graph_file, capsys):
        assert main(["factor", graph_file(complete(4)), "--demand", "", "--output", "text"]) == 0
        assert capsys.readouterr().out.splitlines()[0].count(" ") == 1

    def test_not_found(self, graph_file, capsys):
        assert main(["factor", graph_file(cycle(4)), "--demand", "0,2"]) == 1
        assert json.loads(capsys.readouterr().out)["found"] is False

    @pytest.mark.parametrize("demand", ["0", "a,b", "0,9"])
    def test_bad_demand(self, graph_file, demand):
        assert main(["factor", graph_file(cycle(4)), "--demand", demand]) == 2


class TestExtremal:
    def test_phi(self, capsys):
        assert main(["extremal", "--delta", "3", "--n", "18", "--emit", "phi"]) == 0
        assert capsys.readouterr().out == "[-12,-25,120]\n"

    def test_rho(self, capsys):
        assert main(["extremal", "--delta", "3", "--n", "18", "--emit", "rho"]) == 0
        assert capsys.readouterr().out == "13.2050370308\n"

    @pytest.mark.parametrize(
        ("family", "s", "expected"),
        [("g2", "4", "[-11,-32,160]"), ("g3", "1", "[-12,3,82]")],
    )
    def test_case_families(self, family, s, expected, capsys):
        argv = ["extremal", "--delta", "3", "--n", "18", "--family", family, "--s", s, "--emit", "phi"]
        assert main(argv) == 0
        assert capsys.readouterr().out.strip() == expected

    def test_graph6(self, capsys):
        argv = ["extremal", "--delta", "3", "--n", "18", "--emit", "graph", "--format", "graph6"]
        assert main(argv) == 0
        assert parse_graph6(capsys.readouterr().out.strip()) == build_extremal(3, 18)

    def test_record(self, capsys):
        assert main(["extremal", "--delta", "3", "--n", "10"]) == 0
        record = json.loads(capsys.readouterr().out)
        assert record["family"] == "Gstar"
        assert record["order"] == 10
        assert record["below_theorem_range"] is True

    def test_missing_s(self):
        assert main(["extremal", "--delta", "3", "--n", "18", "--family", "g2"]) == 2


class TestCampaigns:
    def test_verify_lemmas_with_store_and_history(self, tmp_path, capsys):
        store_path = tmp_path / "reports.duckdb"
        argv = ["verify-lemmas", "--delta", "3", "--n", "18", "--s-range", "4..4",
                "--output", "csv", "--store", str(store_path)]
        assert main(argv) == 0
        captured = capsys.readouterr()
        assert captured.out.startswith("check_id,delta,n,s,seed,lhs,rhs,passed,witness\n")
        assert "stored as run" in captured.err
        assert "PASS:" in captured.err

        assert main(["history", "--store", str(store_path), "--runs"]) == 0
        assert "verify-lemmas" in capsys.readouterr().out

        assert main(["history", "--store", str(store_path), "--check-id", "eq3.6", "--output", "csv"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 2
        assert lines[1].startswith("eq3.6,3,18,4,")

    def test_history_keeps_stored_failures(self, tmp_path, sample_report, capsys):
        store_path = tmp_path / "reports.duckdb"
        with ReportStore(store_path) as store:
            store.insert_report(sample_report, "scan")
        assert main(["history", "--store", str(store_path), "--failed", "--output", "csv"]) == 1
        assert capsys.readouterr().out.splitlines()[1] == "scan-discrepancy,,4,,,1,0,false,C~"

    def test_history_missing_store(self, tmp_path):
        assert main(["history", "--store", str(tmp_path / "none.duckdb")]) == 2

    def test_verify_lemmas_partition_instance(self, capsys):
        argv = ["verify-lemmas", "--delta", "3", "--n", "18", "--s-range", "3",
                "--lemma23", "2,1,3,9", "--output", "json"]
        assert main(argv) == 0
        ids = {json.loads(line)["check_id"] for line in capsys.readouterr().out.splitlines()}
        assert {"case2", "lemma2.3", "lemma2.3-equality"} <= ids

    @pytest.mark.parametrize(
        "argv",
        [
            ["verify-lemmas"],
            ["verify-lemmas", "--grid", "--s-range", "4..5"],
            ["verify-lemmas", "--delta", "3", "--n", "18", "--s-range", "5..4"],
            ["verify-lemmas", "--delta", "3", "--n", "18", "--lemma23", "1,2"],
            ["verify-lemmas", "--delta", "3", "--n", "17"],
            ["verify-lemmas", "--delta", "3", "--n", "18", "--strict-margin", "-1"],
        ],
    )
    def test_verify_lemmas_usage_errors(self, argv):
        assert main(argv) == 2

    def test_scan(self, capsys):
        assert main(["scan", "--max-n", "3", "--output", "json"]) == 0
        rows = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
        total = next(row for row in rows if row["check_id"] == "scan-total")
        assert total["witness"] == "graphs=6"

    def test_scan_stream(self, monkeypatch, capsys):
        lines = "\n".join([format_graph6(cycle(4)), format_graph6(complete(4))]) + "\n"
        monkeypatch.setattr("sys.stdin", io.StringIO(lines))
        assert main(["scan", "--max-n", "4", "--stream", "--output", "csv"]) == 0
        assert "scan-total,,,,,0,0,true,graphs=2" in capsys.readouterr().out

    def test_scan_budget(self):
        assert main(["scan", "--max-n", "7"]) == 2

    def test_probe_sharpness(self, capsys):
        assert main(["probe-sharpness", "--delta", "3", "--n", "10"]) == 0
        assert "sharpness-criterion" in capsys.readouterr().out

    def test_verify_theorem_parquet(self, tmp_path, capsys):
        path = tmp_path / "theorem.parquet"
        argv = ["verify-theorem", "--samples", "3", "--seed", "1", "--parquet", str(path)]
        assert main(argv) == 0
        assert path.is_file()
        assert "thm1.1-counterexamples" in capsys.readouterr().out

    def test_failed_rows_exit_one(self, mocker, capsys):
        failing = mocker.patch("spectral_parity.cli.campaign_commands.sharpness_probe")
        report = HarnessReport()
        report.add("eq3.5", 20, 13.2, delta=3, n=18)
        failing.return_value = report
        assert main(["probe-sharpness"]) == 1
        assert "FAIL: 1 of 1 rows failed" in capsys.readouterr().err
