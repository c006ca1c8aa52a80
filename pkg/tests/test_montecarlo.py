import collections
import math
import tracemalloc

import numpy as np
import pytest

from gapprob import constants
from gapprob.gapcount import DrawSpec, InvalidK, Topology, gap_probability
from gapprob.montecarlo import (InvalidSimConfig, SimConfig, make_rng, min_gaps, sample_draw, sample_draws,
                                sample_history, simulate)


class TestSampling(object):
    def test_full_draw(self):
        draw = sample_draw(DrawSpec(6, 6), make_rng(1))
        assert draw.values == (1, 2, 3, 4, 5, 6)

    def test_draws_are_valid_subsets(self, lotto):
        draws = sample_draws(lotto, make_rng(7), 5000)
        assert draws.shape == (5000, 6)
        assert draws.min() >= 1 and draws.max() <= 49
        assert (np.diff(draws, axis=1) > 0).all()

    def test_empty_draw(self):
        assert sample_draws(DrawSpec(5, 0), make_rng(0), 3).shape == (3, 0)

    def test_every_number_equally_likely(self, lotto):
        draws = sample_draws(lotto, make_rng(2024), 60_000)
        frequencies = np.bincount(draws.ravel(), minlength=50)[1:] / 60_000
        assert np.abs(frequencies - 6 / 49).max() < 0.01

    def test_every_pair_of_four_equally_likely(self):
        draws = sample_draws(DrawSpec(4, 2), make_rng(31), 60_000)
        counts = collections.Counter(map(tuple, draws.tolist()))
        assert set(counts) == {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)}
        for pair, hits in counts.items():
            assert abs(hits / 60_000 - 1 / 6) < 0.01, pair

    def test_chunking_keeps_the_stream(self, lotto, monkeypatch):
        whole = sample_draws(lotto, make_rng(8), 1000)
        monkeypatch.setattr('gapprob.montecarlo._KEYS_PER_CHUNK', 7 * 49)
        assert np.array_equal(sample_draws(lotto, make_rng(8), 1000), whole)

    def test_large_pool_memory(self):
        spec = DrawSpec(10_000, 6)
        tracemalloc.start()
        try:
            report = simulate(SimConfig(spec, 2, trials=2_000, seed=1))
            _, peak = tracemalloc.get_traced_memory()
        finally:
            tracemalloc.stop()
        assert peak < 200 * 2 ** 20
        assert report.trials == 2_000
        assert 0 <= report.hits <= 2_000

    def test_seeds_give_different_streams(self, lotto):
        assert not np.array_equal(sample_draws(lotto, make_rng(99), 50), sample_draws(lotto, make_rng(100), 50))
        assert not np.array_equal(sample_draws(lotto, make_rng(99, 0), 50), sample_draws(lotto, make_rng(99, 1), 50))

    def test_history_is_reproducible(self, lotto):
        assert sample_history(lotto, 20, seed=5) == sample_history(lotto, 20, seed=5)
        assert sample_history(lotto, 20, seed=5) != sample_history(lotto, 20, seed=6)

    def test_vectorised_min_gap(self):
        draws = np.array([[1, 4, 10], [2, 8, 10]])
        assert min_gaps(draws, 10, Topology.LINE).tolist() == [3, 2]
        assert min_gaps(draws, 10, Topology.CYCLE).tolist() == [1, 2]


class TestSimConfig(object):
    def test_validation(self, lotto):
        with pytest.raises(InvalidK):
            SimConfig(lotto, 0)
        with pytest.raises(InvalidSimConfig):
            SimConfig(lotto, 2, trials=0)
        with pytest.raises(InvalidSimConfig):
            SimConfig(lotto, 2, seed=-1)


class TestSimulate(object):
    def test_threshold_one_never_hits(self, lotto):
        report = simulate(SimConfig(lotto, 1, trials=10_000))
        assert report.hits == 0
        assert report.ci_low == 0.0

    def test_pairless_draws_never_hit(self):
        assert simulate(SimConfig(DrawSpec(10, 1), 5, trials=1000)).hits == 0

    def test_same_seed_same_report(self, lotto):
        config = SimConfig(lotto, 3, Topology.CYCLE, trials=20_000, seed=99)
        assert simulate(config) == simulate(config)

    def test_workers_do_not_change_the_result(self, lotto, monkeypatch):
        monkeypatch.setattr(constants, 'SIMULATION_BLOCK_SIZE', 10_000)
        config = SimConfig(lotto, 2, trials=45_000, seed=3)
        single, pooled = simulate(config, workers=1), simulate(config, workers=3)
        assert single == pooled
        assert single.blocks == pooled.blocks == 5

    @pytest.mark.parametrize('topo', list(Topology))
    def test_within_five_standard_errors(self, lotto, topo):
        exact = float(gap_probability(lotto, 2, topo).p)
        report = simulate(SimConfig(lotto, 2, topo, trials=100_000, seed=11))
        assert abs(report.estimate - exact) < 5 * report.standard_error(exact)

    def test_interval_coverage(self):
        spec = DrawSpec(20, 4)
        exact = float(gap_probability(spec, 3, Topology.LINE).p)

        def covered(seeds):
            reports = (simulate(SimConfig(spec, 3, trials=10_000, seed=seed)) for seed in seeds)
            return sum(1 for report in reports if report.ci_low <= exact <= report.ci_high)

        # a single unlucky batch of seeds gets one rerun
        assert covered(range(100)) >= 90 or covered(range(100, 200)) >= 90

    @pytest.mark.slow
    @pytest.mark.parametrize('topo,k', [(Topology.LINE, 2), (Topology.CYCLE, 2), (Topology.LINE, 4),
                                        (Topology.CYCLE, 3)])
    def test_million_draws(self, lotto, topo, k):
        exact = float(gap_probability(lotto, k, topo).p)
        report = simulate(SimConfig(lotto, k, topo, trials=1_000_000, seed=2))
        assert abs(report.estimate - exact) < 0.0015
        assert report.ci_high - report.ci_low < 4 * 1.96 * math.sqrt(0.25 / 1_000_000)
