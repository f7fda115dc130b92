"""Tests for the sharpness probe on the extremal graph."""

import pytest

from spectral_parity.config.settings import Limits
from spectral_parity.harness.sharpness import family_orders, sharpness_probe


def test_family_orders_fit_the_oracle_budget():
    assert family_orders(3, 18, Limits()) == [8, 9, 10]
    assert family_orders(3, 9, Limits()) == [8, 9]
    assert family_orders(3, 18, Limits(oracle_edges=10)) == []


def test_probe_records_without_asserting():
    report = sharpness_probe(3, 10)
    assert report.all_passed
    ids = [row["check_id"] for row in report.sorted_rows()]
    assert ids.count("sharpness-criterion") == 1
    assert ids.count("sharpness-margin") == 1
    assert ids.count("sharpness-consistency") == 3
    assert all(row["witness"].startswith("below-range") for row in report.rows
               if row["check_id"] == "sharpness-criterion")


def test_criterion_and_oracle_agree_on_family_members():
    report = sharpness_probe(3, 10)
    consistency = [row for row in report.rows if row["check_id"] == "sharpness-consistency"]
    assert {row["witness"] for row in consistency} == {"agree"}


def test_flag_matches_criterion_row():
    report = sharpness_probe(3, 18)
    criterion = next(row for row in report.rows if row["check_id"] == "sharpness-criterion")
    flag = next(row for row in report.rows if row["check_id"] == "sharpness-flag")
    assert criterion["lhs"] == flag["lhs"]
    assert criterion["witness"].startswith("in-range")
    expected = "contradicts-exception" if flag["lhs"] == 1 else "consistent"
    assert flag["witness"] == expected


@pytest.mark.parametrize(("delta", "n"), [(2, 10), (3, 7)])
def test_invalid_parameters(delta, n):
    with pytest.raises(ValueError):
        sharpness_probe(delta, n)
