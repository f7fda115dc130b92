"""Tests for the randomized spectral-condition check."""

import pytest

from spectral_parity.exceptions import SizeLimitError
from spectral_parity.harness.theorem import SAMPLE_CHECKS, theorem_check


def _by_id(report, check_id):
    return [row for row in report.sorted_rows() if row["check_id"] == check_id]


class TestTheoremCheck:
    def test_one_row_per_sample(self):
        report = theorem_check(3, 18, samples=8, seed=1)
        assert sum(1 for row in report.rows if row["check_id"] in SAMPLE_CHECKS) == 8
        assert report.all_passed
        assert _by_id(report, "thm1.1-counterexamples")[0]["lhs"] == 0
        assert _by_id(report, "thm1.1-control-dense")[0]["lhs"] == 1
        assert _by_id(report, "thm1.1-control-sparse")[0]["witness"] == "accepted=false"

    def test_sparse_schedule_stays_below_threshold(self):
        report = theorem_check(3, 18, samples=5, seed=2, edge_probabilities=[0.3])
        assert len(_by_id(report, "thm1.1-below")) == 5
        hit_rate = _by_id(report, "thm1.1-hit-rate")[0]
        assert (hit_rate["lhs"], hit_rate["rhs"]) == (0, 5)

    def test_dense_schedule_reaches_threshold(self):
        report = theorem_check(3, 18, samples=4, seed=2, edge_probabilities=[0.95])
        assert len(_by_id(report, "thm1.1")) + len(_by_id(report, "thm1.1-extremal")) == 4
        assert report.all_passed

    def test_reproducible(self):
        first = theorem_check(3, 18, samples=6, seed=42)
        assert first.to_csv() == theorem_check(3, 18, samples=6, seed=42).to_csv()
        assert first.to_csv() == theorem_check(3, 18, samples=6, seed=42, max_workers=3).to_csv()

    def test_zero_samples(self):
        report = theorem_check(3, 18, samples=0, seed=0)
        assert _by_id(report, "thm1.1-hit-rate")[0]["witness"] == "rate=0"

    @pytest.mark.parametrize(
        ("delta", "n", "samples"), [(3, 17, 1), (2, 18, 1), (3, 18, -1)]
    )
    def test_invalid_parameters(self, delta, n, samples):
        with pytest.raises(ValueError):
            theorem_check(delta, n, samples=samples, seed=0)

    def test_order_budget(self):
        with pytest.raises(SizeLimitError, match="theorem check order"):
            theorem_check(4, 32, samples=1, seed=0)


@pytest.mark.slow
def test_full_sample_campaign():
    report = theorem_check(3, 18, samples=1000, seed=0, max_workers=4)
    assert report.all_passed
    assert _by_id(report, "thm1.1-counterexamples")[0]["lhs"] == 0
