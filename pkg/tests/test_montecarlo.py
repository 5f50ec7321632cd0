"""Tests for seeded sampling and the Monte Carlo estimates."""

import itertools
import math
from collections import Counter
from pathlib import Path

import numpy as np
import pytest
from scipy.stats import chisquare

from subperm_patterns.config_manager import load_config
from subperm_patterns.errors import InvalidInputError
from subperm_patterns.montecarlo import (
    McConfig,
    McEstimate,
    chunk_rng,
    chunk_sizes,
    estimate_not_avsk,
    estimates_frame,
    linear_trend,
    random_permutation,
    sample_sub_permutation_sizes,
    sweep,
    sweep_grid,
    within_standard_errors,
)
from subperm_patterns.probability import (
    closed_form_sequence,
    load_avoidance_sequence,
    not_av_213_2_count,
    prob_not_avsk,
    subperm_size_law,
)

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def small_config():
    return McConfig(n=8, pattern="213", ks=(1, 2, 4, 8), samples=3000, seed=7, chunk_size=500)


class TestSampler:
    """Test the seeded permutation sampler."""

    def test_single_entry(self):
        rng = chunk_rng(1, 1, 0)
        assert all(random_permutation(1, rng).entries == (1,) for _ in range(5))

    def test_streams_are_reproducible(self):
        first = [random_permutation(10, chunk_rng(42, 10, 3)) for _ in range(3)]
        second = [random_permutation(10, chunk_rng(42, 10, 3)) for _ in range(3)]
        assert first == second
        assert random_permutation(10, chunk_rng(42, 10, 4)) != random_permutation(10, chunk_rng(42, 10, 3))

    def test_chunk_sizes(self):
        assert chunk_sizes(2500, 1000) == [1000, 1000, 500]
        assert chunk_sizes(1000, 1000) == [1000]

    def test_uniformity(self):
        """Chi-square over the 24 permutations of size 4."""
        rng = np.random.default_rng(np.random.SeedSequence(2024))
        counts = Counter(random_permutation(4, rng).entries for _ in range(100_000))
        observed = [counts[p] for p in itertools.permutations(range(1, 5))]
        assert sum(observed) == 100_000
        assert chisquare(observed).pvalue > 0.001

    def test_size_law(self):
        """Empirical |g(5)| at n = 20 against the exact law, bin by bin."""
        samples = 20_000
        counts = sample_sub_permutation_sizes(20, 5, samples, seed=11)
        law = subperm_size_law(20, 5)
        for m, mass in law.masses.items():
            p = float(mass)
            stderr = math.sqrt(p * (1 - p) / samples)
            assert abs(counts.get(m, 0) / samples - p) <= 4 * stderr + 1e-12

    def test_invalid_size(self):
        with pytest.raises(InvalidInputError):
            random_permutation(0, chunk_rng(1, 1, 0))


class TestMcConfig:
    def test_validation(self):
        with pytest.raises(InvalidInputError):
            McConfig(n=5, pattern="213", ks=(6,), samples=10, seed=1)
        with pytest.raises(InvalidInputError):
            McConfig(n=5, pattern="213", ks=(2,), samples=0, seed=1)
        with pytest.raises(InvalidInputError):
            McConfig(n=10, pattern="123456", ks=(2,), samples=10, seed=1)

    def test_from_config(self, tmp_path):
        config = load_config(str(tmp_path / "missing.yaml"))
        cfg = McConfig.from_config(config, 20, "1324", [2, 3], samples=50, seed=None)
        assert cfg.samples == 50
        assert cfg.seed == 20240601
        assert cfg.work_cap == 10_000_000
        assert cfg.chunk_count == 1


class TestEstimates:
    """Test the estimator and its determinism."""

    def test_first_generator_is_zero(self, small_config):
        estimates = {e.k: e for e in sweep(small_config)}
        assert estimates[1].hits == 0
        assert estimates[1].estimate == 0.0

    def test_reproducible(self, small_config):
        assert sweep(small_config) == sweep(small_config)

    def test_independent_of_worker_count(self, small_config):
        from dataclasses import replace

        sequential = sweep(small_config)
        parallel = sweep(replace(small_config, workers=2))
        assert [e.hits for e in sequential] == [e.hits for e in parallel]

    def test_single_k(self):
        cfg = McConfig(n=8, pattern="213", ks=(2,), samples=500, seed=3)
        assert estimate_not_avsk(cfg).k == 2
        with pytest.raises(InvalidInputError):
            estimate_not_avsk(McConfig(n=8, pattern="213", ks=(2, 3), samples=10, seed=3))

    def test_agrees_with_exact_count(self):
        n = 8
        cfg = McConfig(n=n, pattern="213", ks=(2,), samples=20_000, seed=5)
        estimate = estimate_not_avsk(cfg)
        exact = not_av_213_2_count(n) / math.factorial(n)
        assert within_standard_errors(estimate, exact, width=4.0)

    def test_capped_samples_are_reported(self, caplog):
        cfg = McConfig(n=10, pattern="1324", ks=(2, 5), samples=20, seed=1, work_cap=1)
        estimates = sweep(cfg)
        assert all(e.capped == 20 for e in estimates)
        assert all(e.effective_samples == 0 and e.estimate == 0.0 for e in estimates)
        assert "search cap" in caplog.text

    def test_one_budget_per_sample(self, mocker):
        from subperm_patterns.montecarlo import estimator
        from subperm_patterns.permutations import SearchBudget

        spy = mocker.spy(estimator, "contains_pattern")
        cfg = McConfig(n=9, pattern="1324", ks=(2, 3, 4), samples=1, seed=4, work_cap=10_000)
        sweep(cfg)
        budgets = [call.kwargs["budget"] for call in spy.call_args_list]
        assert len(budgets) >= 1
        assert all(isinstance(budget, SearchBudget) for budget in budgets)
        assert all(budget is budgets[0] for budget in budgets)
        assert budgets[0].limit == 10_000

    def test_grid(self):
        cfg = McConfig(n=6, pattern="213", ks=(2, 5), samples=200, seed=9)
        estimates = sweep_grid(cfg, [4, 5, 6])
        assert [(e.n, e.k) for e in estimates] == [(4, 2), (5, 2), (5, 5), (6, 2), (6, 5)]

    def test_frame(self, small_config):
        frame = estimates_frame(sweep(small_config))
        assert list(frame.columns) == ["n", "k", "estimate", "stderr", "samples", "capped", "seed"]
        assert len(frame) == 4

    def test_stderr(self):
        estimate = McEstimate(n=10, k=2, pattern="2 1 3", hits=25, samples=100, capped=0, seed=1)
        assert estimate.estimate == 0.25
        assert estimate.stderr == pytest.approx(math.sqrt(0.25 * 0.75 / 100))

    def test_linear_trend(self):
        slope, intercept = linear_trend([1, 2, 3], [1.0, 3.0, 5.0])
        assert slope == pytest.approx(2.0)
        assert intercept == pytest.approx(-1.0)
        with pytest.raises(InvalidInputError):
            linear_trend([1], [1.0])


@pytest.mark.slow
class TestAgainstSeries:
    """Full-size sweeps against the truncated-series line."""

    def test_213_sweep(self):
        cfg = McConfig(n=50, pattern="213", ks=tuple(range(1, 51)), samples=100_000, seed=20240601)
        estimates = sweep(cfg)
        seq = closed_form_sequence("213", 60)
        inside = sum(within_standard_errors(e, prob_not_avsk(seq, 50, e.k).value, width=3.0, floor=1e-3) for e in estimates)
        assert inside >= 47
        assert estimates[0].estimate == 0.0
        slope, _ = linear_trend([e.k for e in estimates], [e.estimate for e in estimates])
        assert slope > 0

    def test_1324_against_file_series(self):
        seq = load_avoidance_sequence(str(DATA_DIR / "av_1324.txt"), "1324")
        ks = (2, 3, 5, 10, 20, 30, 40, 50)
        cfg = McConfig(n=50, pattern="1324", ks=ks, samples=20_000, seed=20240601)
        estimates = sweep(cfg)
        assert all(e.capped == 0 for e in estimates)
        inside = sum(
            within_standard_errors(e, prob_not_avsk(seq, 50, e.k, 20).value, width=3.0, floor=1e-3)
            for e in estimates
        )
        assert inside >= len(ks) - 1

    def test_longer_patterns_escape_more_often(self):
        """At fixed n and k, 213 < 1324 < 25314."""
        ks = (10, 20)
        by_pattern = {
            pattern: sweep(McConfig(n=50, pattern=pattern, ks=ks, samples=5000, seed=99))
            for pattern in ("213", "1324", "25314")
        }
        for i in range(len(ks)):
            values = [by_pattern[pattern][i].estimate for pattern in ("213", "1324", "25314")]
            assert values[0] < values[1] < values[2]
