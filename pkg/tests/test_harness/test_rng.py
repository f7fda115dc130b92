"""Tests for the SplitMix64 stream."""

import pytest

from spectral_parity.harness.rng import SplitMix64


def test_reference_outputs_for_seed_zero():
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        16294208416658607535,
        7960286522194355700,
        487617019471545679,
    ]


def test_same_seed_same_stream():
    a, b = SplitMix64(2024), SplitMix64(2024)
    assert [a.next_u64() for _ in range(50)] == [b.next_u64() for _ in range(50)]


def test_next_below_range():
    rng = SplitMix64(7)
    values = [rng.next_below(5) for _ in range(500)]
    assert set(values) == {0, 1, 2, 3, 4}
    assert SplitMix64(7).next_below(1) == 0


def test_next_float_unit_interval():
    rng = SplitMix64(3)
    assert all(0.0 <= rng.next_float() < 1.0 for _ in range(200))


def test_shuffle_is_a_deterministic_permutation():
    items, again = list(range(10)), list(range(10))
    SplitMix64(11).shuffle(items)
    SplitMix64(11).shuffle(again)
    assert items == again
    assert sorted(items) == list(range(10))


def test_spawn_continues_the_stream():
    rng = SplitMix64(0)
    children = rng.spawn(2)
    assert children == [16294208416658607535, 7960286522194355700]
    assert rng.next_u64() == 487617019471545679


@pytest.mark.parametrize("seed", [-1, 1 << 64])
def test_seed_must_fit(seed):
    with pytest.raises(ValueError, match="64 bits"):
        SplitMix64(seed)


def test_bound_must_be_positive():
    with pytest.raises(ValueError, match="Bound"):
        SplitMix64(0).next_below(0)
