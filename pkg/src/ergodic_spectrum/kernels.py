"""Hot loops: path sampling and cylinder transition counts.

Each kernel exists twice, a numba version and a vectorised numpy version,
and the two produce bit-identical output. The module-level names
``sample_paths``, ``word_counts`` and ``enumerate_counts`` point at one or the
other depending on :data:`ergodic_spectrum._accel.USE_NUMBA`.

Random numbers come from a counter-based generator: the SplitMix64 output
mixer applied to ``key + k * GAMMA`` where ``key`` is derived from
``(seed, stream)`` and ``k`` is the 1-based position in the word. Any single
coin can therefore be recomputed without replaying the stream.

Count layout (last axis of the count arrays)::

    0 ODD0   odd positions holding 0
    1 ODD1   odd positions holding 1
    2 P00    pairs (k, 2k) with symbols (0, 0)
    3 P01    ...           (0, 1)
    4 P10    ...           (1, 0)
    5 P11    ...           (1, 1)
"""
import numpy as np

from ._accel import USE_NUMBA, njit

ODD0, ODD1, P00, P01, P10, P11 = range(6)
N_COUNTS = 6

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB
_STREAM_SALT = 0xD1B54A32D192ED03
_INV53 = 1.0 / 9007199254740992.0  # 2**-53


def _mix64_int(z):
    z &= MASK64
    z = ((z ^ (z >> 30)) * _M1) & MASK64
    z = ((z ^ (z >> 27)) * _M2) & MASK64
    return z ^ (z >> 31)


def stream_key(seed, stream):
    """64-bit key of sample path ``stream`` under ``seed`` (plain Python ints)."""
    if not (0 <= seed <= MASK64 and 0 <= stream <= MASK64):
        raise ValueError("seed and stream must be unsigned 64-bit integers")
    return _mix64_int(seed ^ _mix64_int((stream * _STREAM_SALT + GAMMA) & MASK64))


def stream_keys(seed, first_stream, count):
    return np.array([stream_key(seed, first_stream + i) for i in range(count)], dtype=np.uint64)


# ---------------------------------------------------------------- numpy path

def _mix64_np(z):
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_M1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_M2)
    return z ^ (z >> np.uint64(31))


def uniforms_numpy(keys, n):
    """Uniforms in [0, 1) of shape ``(len(keys), n)``; column ``k-1`` is position ``k``."""
    keys = np.asarray(keys, dtype=np.uint64)
    with np.errstate(over="ignore"):
        ctr = np.arange(1, n + 1, dtype=np.uint64) * np.uint64(GAMMA)
        z = _mix64_np(keys[:, None] + ctr[None, :])
    return (z >> np.uint64(11)).astype(np.float64) * _INV53


def sample_paths_numpy(keys, n, p, q):
    keys = np.asarray(keys, dtype=np.uint64)
    out = np.empty((keys.shape[0], n), dtype=np.uint8)
    rows = max(1, (1 << 22) // max(n, 1))
    for start in range(0, keys.shape[0], rows):
        u = uniforms_numpy(keys[start:start + rows], n)
        w = out[start:start + rows]
        w[:, 0::2] = u[:, 0::2] < p
        # positions 2^j (2t+1): parents have 2-adic valuation j-1 and are already filled
        step = 2
        while step <= n:
            pos = np.arange(step, n + 1, 2 * step)
            parent = w[:, pos // 2 - 1]
            thr = np.where(parent == 1, q, p)
            w[:, pos - 1] = u[:, pos - 1] < thr
            step *= 2
    return out


def word_counts_numpy(words, n):
    words = np.asarray(words, dtype=np.uint8)
    w = words[:, :n].astype(np.int64)
    out = np.empty((w.shape[0], N_COUNTS), dtype=np.int64)
    odd = w[:, 0::2]
    out[:, ODD1] = odd.sum(axis=1)
    out[:, ODD0] = odd.shape[1] - out[:, ODD1]
    parent = w[:, : n // 2]
    child = w[:, 1::2]
    code = 2 * parent + child
    for c, col in enumerate((P00, P01, P10, P11)):
        out[:, col] = (code == c).sum(axis=1)
    return out


def all_words(n):
    """All ``2**n`` words of length n as a uint8 matrix, row i = binary digits of i, first symbol most significant."""
    idx = np.arange(1 << n, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((idx[:, None] >> shifts[None, :]) & 1).astype(np.uint8)


def enumerate_counts_numpy(n):
    return word_counts_numpy(all_words(n), n)


# ---------------------------------------------------------------- numba path

@njit
def _mix64_nb(z):
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_M1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_M2)
    return z ^ (z >> np.uint64(31))


@njit
def sample_paths_numba(keys, n, p, q):
    out = np.empty((keys.shape[0], n), dtype=np.uint8)
    gamma = np.uint64(GAMMA)
    for r in range(keys.shape[0]):
        key = keys[r]
        ctr = np.uint64(0)
        for k in range(1, n + 1):
            ctr += gamma
            z = _mix64_nb(key + ctr)
            u = np.float64(z >> np.uint64(11)) * _INV53
            if k % 2 == 1:
                thr = p
            elif out[r, k // 2 - 1] == 1:
                thr = q
            else:
                thr = p
            out[r, k - 1] = 1 if u < thr else 0
    return out


@njit
def word_counts_numba(words, n):
    out = np.zeros((words.shape[0], 6), dtype=np.int64)
    half = n // 2
    for r in range(words.shape[0]):
        for i in range(0, n, 2):
            out[r, words[r, i]] += 1
        for k in range(half):
            out[r, 2 + 2 * words[r, k] + words[r, 2 * k + 1]] += 1
    return out


@njit
def enumerate_counts_numba(n):
    total = 1 << n
    out = np.zeros((total, 6), dtype=np.int64)
    half = n // 2
    for idx in range(total):
        for i in range(0, n, 2):
            out[idx, (idx >> (n - 1 - i)) & 1] += 1
        for k in range(half):
            a = (idx >> (n - 1 - k)) & 1
            b = (idx >> (n - 2 - 2 * k)) & 1
            out[idx, 2 + 2 * a + b] += 1
    return out


# ---------------------------------------------------------------- dispatch

def _sample_paths_dispatch(keys, n, p, q):
    return sample_paths_numba(np.ascontiguousarray(keys, dtype=np.uint64), int(n), float(p), float(q))


def _word_counts_dispatch(words, n):
    return word_counts_numba(np.ascontiguousarray(words, dtype=np.uint8), int(n))


def _enumerate_counts_dispatch(n):
    return enumerate_counts_numba(int(n))


if USE_NUMBA:
    sample_paths = _sample_paths_dispatch
    word_counts = _word_counts_dispatch
    enumerate_counts = _enumerate_counts_dispatch
else:
    sample_paths = sample_paths_numpy
    word_counts = word_counts_numpy
    enumerate_counts = enumerate_counts_numpy
