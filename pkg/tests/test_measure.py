import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ergodic_spectrum import kernels
from ergodic_spectrum.errors import DegenerateParams, OutOfRange, PrefixTooShort, WordTooLong
from ergodic_spectrum.ifs import count_pattern11, word_str
from ergodic_spectrum.measure import (
    MeasureParams,
    SamplerSeed,
    cylinder_log_measure,
    cylinder_measure,
    empirical_multiple_average,
    empirical_ones_window,
    entropy_decomposition,
    log_measure_from_counts,
    sample_paths,
    sample_prefix,
    typical_frequency,
    typical_ones_frequency,
)


def product_oracle(p, q, w):
    """mu([w]) straight from the coin rules, one position at a time."""
    prob = 1.0
    for k in range(1, len(w) + 1):
        if k % 2 == 1 or w[k // 2 - 1] == 0:
            bias = p
        else:
            bias = q
        prob *= bias if w[k - 1] == 1 else 1.0 - bias
    return prob


GRID = [0.1, 0.3, 0.5, 0.7, 0.9]


def test_cylinder_examples():
    assert cylinder_log_measure(MeasureParams(0.6, 0.3), "11") == pytest.approx(math.log(0.18), abs=1e-15)
    assert cylinder_log_measure(MeasureParams(0.5, 0.0), "11") == -math.inf
    assert cylinder_log_measure(MeasureParams(0.6, 0.3), "110") == pytest.approx(math.log(0.072), abs=1e-15)
    assert cylinder_log_measure(MeasureParams(0.6, 0.3), "") == 0.0


def test_q_zero_is_golden_measure():
    mp = MeasureParams(0.4)
    assert mp.q == 0.0
    for w in ("1101", "0110", "1010"):
        assert cylinder_measure(mp, w) == pytest.approx(product_oracle(0.4, 0.0, [int(c) for c in w]))


@given(st.floats(0, 1), st.floats(0, 1), st.lists(st.integers(0, 1), max_size=40))
def test_cylinder_matches_product_oracle(p, q, w):
    got = cylinder_measure(MeasureParams(p, q), w)
    assert got == pytest.approx(product_oracle(p, q, w), rel=1e-12, abs=1e-300)


def test_measure_params_range():
    with pytest.raises(OutOfRange):
        MeasureParams(1.2, 0.0)
    with pytest.raises(OutOfRange):
        MeasureParams(0.5, -0.1)


@pytest.mark.parametrize("p", GRID)
@pytest.mark.parametrize("q", GRID)
def test_normalisation_exhaustive(p, q):
    mp = MeasureParams(p, q)
    for n in range(1, 17):
        total = np.exp(log_measure_from_counts(mp, kernels.enumerate_counts(n))).sum()
        assert abs(total - 1.0) < 1e-10


def test_consistency_exhaustive():
    mp = MeasureParams(0.35, 0.8)
    prev = np.array([1.0])
    for n in range(1, 16):
        mu = np.exp(log_measure_from_counts(mp, kernels.enumerate_counts(n)))
        np.testing.assert_allclose(prev, mu[0::2] + mu[1::2], rtol=0, atol=1e-15)
        prev = mu


def test_enumeration_row_matches_single_word():
    mp = MeasureParams(0.6, 0.3)
    mu = np.exp(log_measure_from_counts(mp, kernels.enumerate_counts(6)))
    for i, w in enumerate(itertools.product((0, 1), repeat=6)):
        assert mu[i] == pytest.approx(cylinder_measure(mp, w), rel=1e-13)


# ---------------------------------------------------------------- sampling

def test_sample_forced_coins():
    assert word_str(sample_prefix(MeasureParams(1.0, 1.0), 5, SamplerSeed(1))) == "11111"
    assert word_str(sample_prefix(MeasureParams(0.0, 0.37), 5, SamplerSeed(1))) == "00000"


@pytest.mark.parametrize("seed", [0, 1, 2**63 + 5])
def test_golden_samples_avoid_pattern(seed):
    w = sample_prefix(MeasureParams(0.5, 0.0), 2**16, SamplerSeed(seed, 3))
    assert count_pattern11(w, 2**16) == 0


def test_sample_reproducible():
    mp = MeasureParams(0.3, 0.6)
    a = sample_prefix(mp, 1000, SamplerSeed(9, 4))
    b = sample_prefix(mp, 1000, SamplerSeed(9, 4))
    c = sample_prefix(mp, 1000, SamplerSeed(9, 5))
    np.testing.assert_array_equal(a, b)
    assert (a != c).any()
    np.testing.assert_array_equal(sample_paths(mp, 1000, 6, 9)[4], a)


def test_sample_length_limits():
    with pytest.raises(WordTooLong):
        sample_prefix(MeasureParams(0.5, 0.5), 2**20 + 1, SamplerSeed(0))
    with pytest.raises(OutOfRange):
        sample_prefix(MeasureParams(0.5, 0.5), 0, SamplerSeed(0))


def test_sampling_law_length_10():
    mp = MeasureParams(0.6, 0.3)
    n, n_samples = 10, 10**6
    paths = sample_paths(mp, n, n_samples, seed=20241015)
    codes = paths.astype(np.int64) @ (1 << np.arange(n - 1, -1, -1))
    freq = np.bincount(codes, minlength=1 << n) / n_samples
    prob = np.exp(log_measure_from_counts(mp, kernels.enumerate_counts(n)))
    se = np.sqrt(prob * (1 - prob) / n_samples)
    assert (freq[prob == 0] == 0).all()
    live = prob > 0
    assert (np.abs(freq - prob)[live] <= 4 * se[live]).all()


# ---------------------------------------------------------------- decomposition

def test_entropy_decomposition_small_example():
    mp = MeasureParams(0.6, 0.3)
    assert entropy_decomposition(mp, "110", 2) == pytest.approx(-math.log(0.18), abs=1e-14)


def test_entropy_decomposition_bernoulli():
    mp = MeasureParams(0.37, 0.37)
    w = sample_prefix(mp, 64, SamplerSeed(5))
    assert entropy_decomposition(mp, w, 64) == pytest.approx(-cylinder_log_measure(mp, w), abs=1e-10)


def test_entropy_decomposition_random_64():
    mp = MeasureParams(0.7, 0.2)
    w = sample_prefix(MeasureParams(0.5, 0.5), 64, SamplerSeed(77))
    assert abs(entropy_decomposition(mp, w, 64) + cylinder_log_measure(mp, w)) < 1e-10


def test_entropy_decomposition_identity_bulk():
    rng = np.random.default_rng(12345)
    worst = 0.0
    for _ in range(10_000):
        p, q = rng.uniform(0.05, 0.95, size=2)
        n = 2 * int(rng.integers(1, 64))
        w = rng.integers(0, 2, size=n).astype(np.uint8)
        mp = MeasureParams(float(p), float(q))
        worst = max(worst, abs(entropy_decomposition(mp, w, n) + cylinder_log_measure(mp, w)))
    assert worst < 1e-10


def test_entropy_decomposition_degenerate():
    with pytest.raises(DegenerateParams):
        entropy_decomposition(MeasureParams(0.5, 0.0), "1100", 4)


# ---------------------------------------------------------------- empirical averages

def test_empirical_averages_trivial():
    ones = np.ones(100, dtype=np.uint8)
    zeros = np.zeros(100, dtype=np.uint8)
    assert empirical_multiple_average(ones, 100) == 1.0
    assert empirical_multiple_average(zeros, 100) == 0.0
    assert empirical_ones_window(np.ones(8, dtype=np.uint8), 8) == 1.0
    assert empirical_ones_window("00001111", 8) == 1.0
    with pytest.raises(PrefixTooShort):
        empirical_multiple_average("1111", 6)


def test_empirical_averages_fair_coin():
    mp = MeasureParams(0.5, 0.5)
    w = sample_prefix(mp, 2**18, SamplerSeed(11))
    assert empirical_multiple_average(w, 2**18) == pytest.approx(0.25, abs=0.01)
    assert empirical_ones_window(w, 2**18) == pytest.approx(0.5, abs=0.01)


@pytest.mark.parametrize("p,q", [(0.5, 0.5), (0.6, 0.3), (0.2, 0.9), (0.8, 0.1)])
def test_frequency_limits_64_seeds(p, q):
    mp = MeasureParams(p, q)
    n = 2**18
    paths = sample_paths(mp, n, 64, seed=4242)
    avg = np.mean([empirical_multiple_average(w, n) for w in paths])
    window = np.mean([empirical_ones_window(w, n) for w in paths])
    band = 5 * n ** -0.5
    assert abs(avg - typical_frequency(mp)) <= band
    assert abs(window - typical_ones_frequency(mp)) <= band
