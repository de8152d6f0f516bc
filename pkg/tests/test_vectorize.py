import math

import numpy as np
import pytest

from delrips import (FiltrationSpec, build_delaunay_rips, compute_diagram,
                     delay_embed, fit_pi_grid, near_cocircular_quad,
                     persistence_image, persistence_stats, persistent_entropy,
                     stats_feature_vector)
from delrips.errors import AllEmpty, SeriesTooShort, ValidationError
from delrips.vectorize import PIGrid, stats_header
from naive_oracle import quadrature_pi


class TestGrid:
    def test_single_point_collection_widened(self):
        grid = fit_pi_grid([[(0.0, 2.0)]])
        b0, b1 = grid.birth_range
        p0, p1 = grid.persistence_range
        assert b0 < 0.0 < b1 or (b0 < b1 and b0 <= 0.0 <= b1)
        assert p0 < 2.0 < p1
        assert b1 - b0 > 0 and p1 - p0 > 0

    def test_min_max_ranges(self):
        grid = fit_pi_grid([[(0.0, 1.0)], [(1.0, 3.0)]])
        assert grid.birth_range == (0.0, 1.0)
        assert grid.persistence_range == (1.0, 2.0)

    def test_pooled_collection_shares_grid(self):
        diagrams = [[(0.0, 1.0)], [], [(0.5, 4.0)]]
        grid = fit_pi_grid(diagrams, resolution=(5, 5))
        assert grid.persistence_range == (1.0, 3.5)
        assert grid.size == 25

    def test_all_empty(self):
        with pytest.raises(AllEmpty):
            fit_pi_grid([[], [(0.0, math.inf)]])

    def test_default_sigma_half_pixel_height(self):
        grid = fit_pi_grid([[(0.0, 1.0)], [(1.0, 3.0)]], resolution=(4, 2))
        assert grid.sigma == pytest.approx(0.5 * (2.0 - 1.0) / 4)

    def test_grid_validation(self):
        with pytest.raises(ValidationError):
            PIGrid((0, 1), (0, 1), (0, 2), 0.1)
        with pytest.raises(ValidationError):
            PIGrid((0, 0), (0, 1), (2, 2), 0.1)


class TestImage:
    def grid(self):
        return PIGrid(birth_range=(0.0, 1.0), persistence_range=(0.0, 2.0),
                      resolution=(2, 2), sigma=0.5)

    def test_empty_diagram_zero_vector(self):
        assert np.array_equal(persistence_image([], self.grid()),
                              np.zeros(4))

    def test_zero_persistence_only_zero_vector(self):
        img = persistence_image([(0.5, 0.5), (1.0, 1.0)], self.grid())
        assert np.array_equal(img, np.zeros(4))

    def test_matches_quadrature_oracle(self):
        pairs = [(0.0, 2.0)]
        img = persistence_image(pairs, self.grid())
        oracle = quadrature_pi(pairs, self.grid())
        assert np.max(np.abs(img - oracle)) < 1e-6

    def test_matches_quadrature_oracle_multi(self, rng):
        pairs = [(float(b), float(b + p))
                 for b, p in rng.uniform(0.1, 2.0, (4, 2))]
        grid = fit_pi_grid([pairs], resolution=(3, 4))
        img = persistence_image(pairs, grid)
        oracle = quadrature_pi(pairs, grid)
        assert np.max(np.abs(img - oracle)) < 1e-6

    def test_additive_under_union(self, rng):
        grid = self.grid()
        d1 = [(0.0, 1.0), (0.2, 1.7)]
        d2 = [(0.5, 0.9)]
        lhs = persistence_image(d1 + d2, grid)
        rhs = persistence_image(d1, grid) + persistence_image(d2, grid)
        assert np.allclose(lhs, rhs, atol=1e-12)

    def test_nonnegative_and_scales_under_duplication(self):
        grid = self.grid()
        d = [(0.0, 1.5), (0.3, 0.8)]
        img = persistence_image(d, grid)
        assert (img >= 0).all()
        assert np.allclose(persistence_image(d + d, grid), 2 * img)

    def test_infinite_pairs_excluded(self):
        grid = self.grid()
        img = persistence_image([(0.0, 2.0), (0.0, math.inf)], grid)
        assert np.allclose(img, persistence_image([(0.0, 2.0)], grid))

    def test_resolution_sizes(self):
        for rows, cols in ((5, 1), (5, 5), (1, 1)):
            grid = PIGrid((0, 1), (0, 1), (rows, cols), 0.1)
            assert persistence_image([(0.2, 0.7)], grid).shape == (rows * cols,)


class TestStats:
    def test_two_equal_bars_entropy(self):
        assert persistent_entropy([1.0, 1.0]) == pytest.approx(math.log(2))

    def test_entropy_equal_bars_general(self):
        for k in (1, 2, 5, 17):
            assert persistent_entropy([3.7] * k) == pytest.approx(
                math.log(k), abs=1e-12)

    def test_entropy_maximal_at_equal_bars(self, rng):
        for _ in range(10):
            k = int(rng.integers(2, 8))
            base = [1.0] * k
            other = list(1.0 + rng.uniform(-0.5, 0.5, k))
            assert persistent_entropy(other) <= persistent_entropy(base) + 1e-12

    def test_entropy_log_base(self):
        assert persistent_entropy([1.0, 1.0], log_base=2.0) == pytest.approx(1.0)

    def test_single_pair_stats(self):
        vec = persistence_stats([(0.0, 2.0)])
        mean_block, pers_block = vec[:8], vec[8:]
        assert mean_block[0] == 1.0     # mean of means
        assert mean_block[1] == 0.0     # std
        assert tuple(mean_block[4:7]) == (1.0, 1.0, 1.0)  # percentiles
        assert mean_block[7] == 0.0     # singleton entropy
        assert pers_block[0] == 2.0
        assert pers_block[1] == 0.0
        assert pers_block[7] == 0.0

    def test_empty_diagram_nan(self):
        vec = persistence_stats([])
        assert vec.shape == (16,)
        assert np.isnan(vec).all()
        # Diagrams with only essential classes count as empty too.
        assert np.isnan(persistence_stats([(0.0, math.inf)])).all()

    def test_known_multiset_moments(self):
        vec = persistence_stats([(0.0, 1.0), (0.0, 3.0)])
        pers_block = vec[8:]
        assert pers_block[0] == 2.0                      # mean of {1,3}
        assert pers_block[1] == 1.0                      # population std
        assert pers_block[2] == 0.0                      # symmetric: no skew
        assert pers_block[3] == -2.0                     # two-point excess kurtosis
        assert tuple(pers_block[4:7]) == (1.5, 2.0, 2.5)  # linear percentiles


class TestFeatureVector:
    def test_all_empty_48_nans(self):
        vec = stats_feature_vector([], [], [])
        assert vec.shape == (48,)
        assert np.isnan(vec).all()
        assert len(stats_header()) == 48

    def test_quad_composition(self):
        diag = compute_diagram(build_delaunay_rips(
            near_cocircular_quad(0.1), FiltrationSpec(max_hom_dim=1)))
        vec = stats_feature_vector(diag.pairs(0), diag.pairs(1), ())
        assert vec.shape == (48,)
        h0 = [(b, d) for b, d in diag.pairs(0) if math.isfinite(d)]
        means = [(b + d) / 2 for b, d in h0]
        assert vec[0] == pytest.approx(np.mean(means))
        # H1 block: pairs (sqrt3, 1.9) and (1.9, 1.9).
        assert vec[16 + 8] == pytest.approx(np.mean([1.9 - math.sqrt(3), 0.0]))
        assert np.isnan(vec[32:]).all()


class TestDelayEmbed:
    def test_documented_example(self):
        cloud = delay_embed(list(range(15)), embed_dim=3, tau=5, stride=1)
        assert len(cloud) == 5
        assert cloud[0] == (0.0, 5.0, 10.0)
        assert cloud[4] == (4.0, 9.0, 14.0)

    def test_constant_series(self):
        cloud = delay_embed([2.0] * 9, embed_dim=2, tau=3)
        assert all(p == (2.0, 2.0) for p in cloud.points)

    def test_small_example(self):
        cloud = delay_embed([1, 2, 3], embed_dim=2, tau=1)
        assert cloud.points == ((1.0, 2.0), (2.0, 3.0))

    def test_count_formula(self, rng):
        for _ in range(20):
            m = int(rng.integers(2, 4))
            tau = int(rng.integers(1, 6))
            stride = int(rng.integers(1, 5))
            length = int(rng.integers((m - 1) * tau + 1, 60))
            cloud = delay_embed(list(range(length)), m, tau, stride)
            expected = (length - (m - 1) * tau - 1) // stride + 1
            assert len(cloud) == expected

    def test_too_short(self):
        with pytest.raises(SeriesTooShort):
            delay_embed([1, 2, 3], embed_dim=3, tau=5)
        with pytest.raises(ValidationError):
            delay_embed(list(range(30)), embed_dim=4, tau=1)
