import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from emosets.core import (
    NormalizationBounds,
    denormalize,
    dominates,
    nondominated_filter,
    normalize,
)


def brute_force_survivors(points):
    """O(n^2) oracle: non-duplicate points not dominated by any other point."""
    pts = [tuple(p) for p in points]
    survivors = []
    for i, p in enumerate(pts):
        if p in pts[:i]:
            continue  # duplicate collapsed to the first occurrence
        dominated = any(
            all(q[j] <= p[j] for j in range(len(p))) and any(q[j] < p[j] for j in range(len(p)))
            for q in pts
        )
        if not dominated:
            survivors.append(p)
    return set(survivors)


class TestDominates:
    def test_strict_improvement_everywhere(self):
        assert dominates((1, 2), (2, 3))

    def test_incomparable_pair(self):
        assert not dominates((1, 3), (3, 1))
        assert not dominates((3, 1), (1, 3))

    def test_equality_is_not_dominance(self):
        assert not dominates((1, 2), (1, 2))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            dominates((1, 2), (1, 2, 3))


class TestNondominatedFilter:
    def test_dominated_point_removed(self):
        out = nondominated_filter([(1, 2), (2, 1), (2, 2)])
        assert brute(out) == {(1.0, 2.0), (2.0, 1.0)}

    def test_duplicates_collapse(self):
        out = nondominated_filter([(1, 2), (1, 2)])
        assert brute(out) == {(1.0, 2.0)}

    def test_antichain_is_fixed_point(self):
        pts = np.array([(0, 4), (1, 3), (2, 2), (3, 1), (4, 0)], dtype=float)
        out = nondominated_filter(pts)
        assert brute(out) == {tuple(p) for p in pts}

    def test_empty_input_rejected(self):
        with pytest.raises(ValueError):
            nondominated_filter(np.empty((0, 2)))

    @pytest.mark.parametrize("seed", range(8))
    def test_matches_pairwise_oracle(self, seed):
        rng = np.random.default_rng(seed)
        pts = rng.integers(0, 6, size=(40, 3)).astype(float)  # coarse grid forces ties/dups
        out = nondominated_filter(pts)
        assert brute(out) == brute_force_survivors(pts)

    @pytest.mark.parametrize("seed", range(5))
    def test_idempotent(self, seed):
        rng = np.random.default_rng(seed)
        pts = rng.random((60, 4))
        once = nondominated_filter(pts)
        twice = nondominated_filter(once)
        assert np.array_equal(once, twice)


def brute(arr):
    return {tuple(p) for p in np.atleast_2d(arr)}


@settings(max_examples=150, deadline=None)
@given(
    v=st.lists(st.floats(-10, 10), min_size=2, max_size=5),
    lower_gap=st.lists(st.floats(0, 5), min_size=5, max_size=5),
    upper_gap=st.lists(st.floats(0, 5), min_size=5, max_size=5),
)
def test_dominance_transitive_on_constructed_chain(v, lower_gap, upper_gap):
    v = np.asarray(v)
    m = len(v)
    u = v - np.asarray(lower_gap[:m]) - 1e-3  # strictly better everywhere
    w = v + np.asarray(upper_gap[:m]) + 1e-3  # strictly worse everywhere
    assert dominates(u, v) and dominates(v, w) and dominates(u, w)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.floats(-1e6, 1e6), min_size=2, max_size=6), st.lists(st.floats(-1e6, 1e6), min_size=2, max_size=6))
def test_dominance_asymmetric_and_irreflexive(a, b):
    n = min(len(a), len(b))
    u, v = np.asarray(a[:n]), np.asarray(b[:n])
    assert not dominates(u, u)
    assert not (dominates(u, v) and dominates(v, u))


class TestNormalize:
    def test_ideal_maps_to_zero(self):
        b = NormalizationBounds(np.zeros(3), np.ones(3))
        assert np.array_equal(normalize(np.zeros(3), b), np.zeros(3))

    def test_nadir_maps_to_one(self):
        b = NormalizationBounds(np.zeros(3), np.full(3, 2.0))
        assert np.array_equal(normalize(np.full(3, 2.0), b), np.ones(3))

    def test_affine_map_value(self):
        b = NormalizationBounds(np.zeros(3), np.full(3, 0.5))
        out = normalize(np.array([0.25, 0.25, 0.0]), b)
        assert np.array_equal(out, np.array([0.5, 0.5, 0.0]))

    def test_invalid_bounds_rejected(self):
        with pytest.raises(ValueError):
            NormalizationBounds(np.array([0.0, 1.0]), np.array([1.0, 1.0]))

    @pytest.mark.parametrize("seed", range(5))
    def test_round_trip(self, seed):
        rng = np.random.default_rng(seed)
        ideal = rng.normal(size=4)
        nadir = ideal + rng.random(4) + 0.1
        b = NormalizationBounds(ideal, nadir)
        f = rng.normal(size=(20, 4)) * 3
        back = denormalize(normalize(f, b), b)
        assert np.allclose(back, f, rtol=1e-12, atol=1e-12)
