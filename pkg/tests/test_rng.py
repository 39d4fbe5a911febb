"""Generator tests: known-answer values from an independent transcription
of the published SplitMix64 routine, plus stream-consistency properties."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from teammax.rng import SplitMix64

_MASK = (1 << 64) - 1


def _reference_outputs(seed: int, count: int) -> list[int]:
    """Pure-Python big-int transcription of the additive-state generator,
    kept separate from the package's masked/vectorized implementation."""
    out = []
    state = seed & _MASK
    for _ in range(count):
        state = (state + 0x9E3779B97F4B7C15) & _MASK
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        z = z ^ (z >> 31)
        out.append(z)
    return out


# Frozen from _reference_outputs before the package implementation existed;
# guards both routes against simultaneous drift.
_SEED0_FIRST3 = [
    0x09AAB36CFDA2D1B3,
    0x5B00C67197590451,
    0x0EB2AFB57F7F9972,
]


def test_seed0_known_answers():
    assert _reference_outputs(0, 3) == _SEED0_FIRST3
    rng = SplitMix64(0)
    assert [rng.next_uint64() for _ in range(3)] == _SEED0_FIRST3


@given(st.integers(min_value=0, max_value=2**64 - 1))
def test_matches_reference_for_any_seed(seed):
    rng = SplitMix64(seed)
    assert [rng.next_uint64() for _ in range(5)] == _reference_outputs(seed, 5)


def test_negative_and_huge_seeds_wrap():
    assert SplitMix64(-1).next_uint64() == SplitMix64(2**64 - 1).next_uint64()
    assert SplitMix64(2**64 + 7).next_uint64() == SplitMix64(7).next_uint64()


def test_floats_match_sequential_calls():
    a = SplitMix64(42).floats(100)
    rng = SplitMix64(42)
    b = np.asarray([rng.next_float() for _ in range(100)])
    assert np.array_equal(a, b)


def test_floats_continue_the_stream():
    rng = SplitMix64(7)
    head = rng.floats(3)
    tail = rng.floats(2)
    whole = SplitMix64(7).floats(5)
    assert np.array_equal(np.concatenate([head, tail]), whole)


def test_floats_in_unit_interval():
    values = SplitMix64(3).floats(1000)
    assert np.all(values >= 0.0)
    assert np.all(values < 1.0)


def test_float_precision_is_53_bits():
    rng = SplitMix64(0)
    expected = [(z >> 11) * 2.0**-53 for z in _reference_outputs(0, 10)]
    assert [rng.next_float() for _ in range(10)] == expected


def test_spawn_is_deterministic_and_distinct():
    parent = SplitMix64(123)
    a = parent.spawn(0)
    b = parent.spawn(1)
    a2 = SplitMix64(123).spawn(0)
    assert a.seed == a2.seed
    assert a.seed != b.seed
    assert a.next_uint64() == SplitMix64(a.seed).next_uint64()


def test_spawn_does_not_disturb_parent_stream():
    parent = SplitMix64(5)
    first = parent.next_uint64()
    parent.spawn(3)
    second = parent.next_uint64()
    fresh = SplitMix64(5)
    assert [first, second] == [fresh.next_uint64(), fresh.next_uint64()]


def test_spawn_differs_from_parent():
    parent = SplitMix64(99)
    child = parent.spawn(0)
    assert child.seed != parent.seed


@given(st.integers(min_value=0, max_value=2**32), st.integers(min_value=1, max_value=12))
def test_simplex_point_is_a_distribution(seed, size):
    point = SplitMix64(seed).simplex_point(size)
    assert point.shape == (size,)
    assert np.all(point >= 0.0)
    assert math.isclose(point.sum(), 1.0, abs_tol=1e-12)


def test_simplex_point_size_one_is_degenerate():
    assert np.array_equal(SplitMix64(0).simplex_point(1), np.ones(1))


def test_simplex_point_is_not_constant():
    a = SplitMix64(1).simplex_point(4)
    b = SplitMix64(2).simplex_point(4)
    assert not np.array_equal(a, b)


def test_simplex_points_cover_the_interior():
    # flat Dirichlet should not concentrate on vertices or the barycenter
    points = np.asarray([SplitMix64(s).simplex_point(3) for s in range(200)])
    assert points.max() > 0.8
    assert points.min() < 0.05
    assert abs(points.mean() - 1.0 / 3.0) < 0.02
