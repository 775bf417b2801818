import os
import subprocess
import sys

import numpy as np
import pytest

from ergodic_spectrum import kernels as K

@pytest.mark.parametrize("n", [1, 2, 7, 64, 1000, 4097])
@pytest.mark.parametrize("p,q", [(0.6, 0.3), (0.5, 0.0), (1.0, 1.0), (0.0, 0.7), (0.43, 0.99)])
def test_sampler_paths_bit_identical(n, p, q):
    keys = K.stream_keys(7, 0, 9)
    a = K.sample_paths_numpy(keys, n, p, q)
    b = K.sample_paths_numba(keys, n, p, q)
    assert a.dtype == b.dtype == np.uint8
    np.testing.assert_array_equal(a, b)


@pytest.mark.parametrize("n", [1, 2, 5, 16, 33])
def test_word_counts_bit_identical(n):
    keys = K.stream_keys(3, 100, 50)
    words = K.sample_paths_numpy(keys, n, 0.5, 0.5)
    np.testing.assert_array_equal(K.word_counts_numpy(words, n), K.word_counts_numba(words, n))


@pytest.mark.parametrize("n", [1, 2, 3, 8, 11])
def test_enumerate_counts_bit_identical(n):
    np.testing.assert_array_equal(K.enumerate_counts_numpy(n), K.enumerate_counts_numba(n))


def test_enumerate_counts_sum_to_positions():
    n = 9
    c = K.enumerate_counts_numpy(n)
    assert (c[:, [K.ODD0, K.ODD1]].sum(axis=1) == (n + 1) // 2).all()
    assert (c[:, K.P00:].sum(axis=1) == n // 2).all()


def test_all_words_order_appends_last_symbol():
    w3, w4 = K.all_words(3), K.all_words(4)
    np.testing.assert_array_equal(w4[0::2, :3], w3)
    np.testing.assert_array_equal(w4[1::2, 3], 1)
    assert "".join(map(str, w3[6])) == "110"


def test_uniforms_in_unit_interval_and_reproducible():
    keys = K.stream_keys(2024, 0, 4)
    u = K.uniforms_numpy(keys, 10_000)
    assert u.min() >= 0.0 and u.max() < 1.0
    assert abs(u.mean() - 0.5) < 0.01
    np.testing.assert_array_equal(u, K.uniforms_numpy(keys, 10_000))


def test_stream_keys_distinct_and_fixed():
    keys = K.stream_keys(42, 0, 10_000)
    assert len(set(keys.tolist())) == keys.size
    assert K.stream_key(42, 0) != K.stream_key(43, 0)
    assert K.stream_key(42, 1) != K.stream_key(42, 0)


def test_prefix_of_longer_sample_is_shorter_sample():
    keys = K.stream_keys(5, 0, 3)
    long = K.sample_paths(keys, 500, 0.4, 0.8)
    short = K.sample_paths(keys, 123, 0.4, 0.8)
    np.testing.assert_array_equal(long[:, :123], short)


def test_stream_key_rejects_out_of_range():
    with pytest.raises(ValueError):
        K.stream_key(-1, 0)
    with pytest.raises(ValueError):
        K.stream_key(0, 1 << 64)


def test_env_flag_selects_numpy_path():
    code = "from ergodic_spectrum import kernels as K; print(K.sample_paths is K.sample_paths_numpy)"
    env = dict(os.environ, ERGODIC_SPECTRUM_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "True"
    env["ERGODIC_SPECTRUM_DISABLE_NUMBA"] = "0"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"


def test_generator_output_frozen():
    # pinned bits: any change to the generator breaks reproducibility of stored runs
    assert K.stream_key(42, 0) == 5006236285904387910
    assert K.stream_key(42, 1) == 16143042806986580970
    u = K.uniforms_numpy(K.stream_keys(42, 0, 1), 3)[0]
    assert u.tolist() == [0.7906546757343162, 0.052227385260500414, 0.272771964268555]
    w = K.sample_paths(K.stream_keys(42, 0, 1), 40, 0.5, 0.5)[0]
    assert "".join(map(str, w)) == "0111011001010101101001001111111100001110"
