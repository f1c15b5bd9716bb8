import itertools
from math import comb

import numpy as np
import pytest

from emosets.scalarize import (
    PBI,
    TCHEBYCHEFF,
    lattice_resolution_for_size,
    pbi,
    pbi_values,
    simplex_lattice,
    tchebycheff,
    tchebycheff_values,
    update_ideal,
)


def lattice_by_enumeration(m, h):
    """Oracle: filter the full integer grid for compositions of h."""
    return sorted(tup for tup in itertools.product(range(h + 1), repeat=m) if sum(tup) == h)


class TestSimplexLattice:
    def test_m2_h2_full_enumeration(self):
        W = simplex_lattice(2, 2)
        assert W.tolist() == [[0.0, 1.0], [0.5, 0.5], [1.0, 0.0]]

    @pytest.mark.parametrize("m,h,expected", [(3, 12, 91), (5, 17, 5985)])
    def test_benchmark_sizes(self, m, h, expected):
        assert len(simplex_lattice(m, h)) == expected

    def test_counts_match_binomial(self):
        for m in range(2, 7):
            for h in range(1, 21):
                assert len(simplex_lattice(m, h)) == comb(m + h - 1, m - 1)

    def test_matches_grid_enumeration_oracle(self):
        for m, h in [(2, 5), (3, 4), (4, 3)]:
            W = simplex_lattice(m, h)
            numerators = [tuple(int(round(v * h)) for v in row) for row in W]
            assert numerators == lattice_by_enumeration(m, h)

    def test_rows_sum_to_one_and_nonnegative(self):
        W = simplex_lattice(4, 9)
        assert np.all(np.abs(W.sum(axis=1) - 1.0) <= 1e-12)
        assert np.all(W >= 0)

    def test_invalid_parameters(self):
        with pytest.raises(ValueError):
            simplex_lattice(3, 0)
        with pytest.raises(ValueError):
            simplex_lattice(1, 5)

    def test_resolution_lookup(self):
        assert lattice_resolution_for_size(3, 5050) == 99
        assert lattice_resolution_for_size(5, 210) == 6
        with pytest.raises(ValueError):
            lattice_resolution_for_size(3, 92)


class TestTchebycheff:
    def test_hand_value(self):
        assert tchebycheff([0.4, 0.8], [0.5, 0.5], [0, 0]) == pytest.approx(0.4, abs=0)

    def test_reference_scores_zero(self):
        z = np.array([0.3, 0.7, 0.1])
        for w in simplex_lattice(3, 3):
            assert tchebycheff(z, w, z) == 0.0

    def test_zero_weight_floor(self):
        assert tchebycheff([1, 1], [0, 1], [0, 0]) == pytest.approx(1.0, abs=0)
        # the floored term alone
        assert tchebycheff([1, 0], [0, 1], [0, 0]) == pytest.approx(1e-6, abs=0)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            tchebycheff([1, 2, 3], [0.5, 0.5], [0, 0])

    @pytest.mark.parametrize("seed", range(6))
    def test_weakly_monotone_under_dominance(self, seed):
        rng = np.random.default_rng(seed)
        z = rng.random(3) * 0.1
        f = z + rng.random(3)
        worse = f + rng.random(3) * 0.5  # f dominates worse; z below both
        for w in simplex_lattice(3, 4):
            assert tchebycheff(f, w, z) <= tchebycheff(worse, w, z)


class TestPbi:
    def test_point_on_ray(self):
        assert pbi([2, 0], [1, 0], [0, 0], 5.0) == pytest.approx(2.0, abs=0)

    def test_off_ray_penalty(self):
        assert pbi([1, 1], [1, 0], [0, 0], 5.0) == pytest.approx(6.0, abs=0)

    def test_reference_scores_zero(self):
        z = np.array([0.2, 0.4])
        assert pbi(z, [0.5, 0.5], z, 5.0) == 0.0

    @pytest.mark.parametrize("seed", range(6))
    def test_translation_covariant(self, seed):
        rng = np.random.default_rng(seed)
        f = rng.random(4)
        z = rng.random(4) * 0.2
        w = rng.random(4) + 0.05
        c = rng.normal(size=4)
        assert pbi(f + c, w, z + c, 5.0) == pytest.approx(pbi(f, w, z, 5.0), rel=1e-9)

    def test_theta_default_is_five(self):
        assert PBI.theta == 5.0
        assert TCHEBYCHEFF.kind == "tchebycheff"


class TestBatchedForms:
    @pytest.mark.parametrize("seed", range(4))
    def test_batch_matches_scalar(self, seed):
        rng = np.random.default_rng(seed)
        W = simplex_lattice(3, 5)
        F = rng.random((len(W), 3))
        z = rng.random(3) * 0.1
        tch = tchebycheff_values(F, W, z)
        pb = pbi_values(F, W, z, 5.0)
        for i in range(len(W)):
            assert tch[i] == pytest.approx(tchebycheff(F[i], W[i], z), rel=1e-14)
            assert pb[i] == pytest.approx(pbi(F[i], W[i], z, 5.0), rel=1e-14)


class TestUpdateIdeal:
    def test_componentwise_min(self):
        out = update_ideal([0.5, 0.5], [0.3, 0.7])
        assert np.array_equal(out, [0.3, 0.5])

    def test_no_improvement_keeps_z(self):
        z = np.array([0.1, 0.2])
        assert np.array_equal(update_ideal(z, [0.5, 0.9]), z)

    def test_fold_is_order_independent(self):
        rng = np.random.default_rng(0)
        stream = rng.random((30, 3))
        z0 = np.full(3, np.inf)
        folds = []
        for perm_seed in range(3):
            order = np.random.default_rng(perm_seed).permutation(len(stream))
            z = z0
            for f in stream[order]:
                z = update_ideal(z, f)
            folds.append(z)
        assert all(np.array_equal(folds[0], z) for z in folds[1:])
