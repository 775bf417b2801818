"""Telescopic product measures mu_{p,q} on {0,1}^N.

Odd positions are independent coins with P(1) = p. Position 2k is a coin
whose bias depends on position k: p after a 0, q after a 1. With q = 0 this
is the measure mu_p carried by the set where w_k w_2k = 0 for every k.

Cylinder probabilities only depend on six counts (odd zeros/ones and the
four (k, 2k) pair types), computed by :mod:`ergodic_spectrum.kernels`.
"""
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DegenerateParams, OutOfRange, WordTooLong
from .ifs import MAX_WORD_LENGTH, _even_prefix, as_word, count_ones, count_pattern11


@dataclass(frozen=True)
class MeasureParams:
    p: float
    q: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.p <= 1.0 and 0.0 <= self.q <= 1.0):
            raise OutOfRange(f"measure parameters must lie in [0, 1], got ({self.p}, {self.q})")

    @property
    def interior(self):
        return 0.0 < self.p < 1.0 and 0.0 < self.q < 1.0

    def log_probs(self):
        """Log-probabilities in kernel count order (ODD0, ODD1, P00, P01, P10, P11)."""
        p, q = self.p, self.q
        with np.errstate(divide="ignore"):
            return np.log(np.array([1 - p, p, 1 - p, p, 1 - q, q], dtype=np.float64))


@dataclass(frozen=True)
class SamplerSeed:
    seed: int
    stream: int = 0

    def key(self):
        return kernels.stream_key(self.seed, self.stream)


def log_measure_from_counts(mp, counts):
    """log mu([w]) for rows of a count array; zero-probability cylinders give -inf."""
    counts = np.asarray(counts)
    lp = mp.log_probs()
    with np.errstate(invalid="ignore"):
        terms = np.where(counts > 0, counts * lp, 0.0)
    return terms.sum(axis=-1)


def cylinder_log_measure(mp, w):
    w = as_word(w)
    if w.size == 0:
        return 0.0
    counts = kernels.word_counts(w[None, :], w.size)[0]
    return float(log_measure_from_counts(mp, counts))


def cylinder_measure(mp, w):
    return math.exp(cylinder_log_measure(mp, w))


def _check_length(n):
    if n < 1:
        raise OutOfRange(f"word length must be positive, got {n}")
    if n > MAX_WORD_LENGTH:
        raise WordTooLong(f"word length {n} exceeds {MAX_WORD_LENGTH}")


def sample_prefix(mp, n, seed):
    """First ``n`` coordinates of one mu_{p,q}-random sequence, fixed by ``seed``."""
    _check_length(n)
    keys = np.array([seed.key()], dtype=np.uint64)
    return kernels.sample_paths(keys, n, mp.p, mp.q)[0]


def sample_paths(mp, n, n_paths, seed, first_stream=0):
    """``n_paths`` independent prefixes as rows; row i uses stream ``first_stream + i``."""
    _check_length(n)
    keys = kernels.stream_keys(seed, first_stream, n_paths)
    return kernels.sample_paths(keys, n, mp.p, mp.q)


def entropy_decomposition(mp, w, n):
    """-log mu([w_1..w_n]) via the counts X_1^{n/2}, X_1^n and X_11^n."""
    if not mp.interior:
        raise DegenerateParams(f"p and q must lie in (0, 1), got ({mp.p}, {mp.q})")
    w, n = _even_prefix(w, n)
    p, q = mp.p, mp.q
    x_half = count_ones(w, n // 2)
    x_all = count_ones(w, n)
    x11 = count_pattern11(w, n)
    minus_h = (
        n * math.log1p(-p)
        + x_half * (math.log1p(-q) - math.log1p(-p))
        + x_all * (math.log(p) - math.log1p(-p))
        - x11 * (math.log(p) + math.log1p(-q) - math.log1p(-p) - math.log(q))
    )
    return -minus_h


def empirical_multiple_average(w, n):
    """(2/n) * #{k <= n/2 : w_k = w_2k = 1}."""
    w, n = _even_prefix(w, n)
    if n == 0:
        raise OutOfRange("n must be positive")
    return 2.0 * count_pattern11(w, n) / n


def empirical_ones_window(w, n):
    """Frequency of 1s in positions n/2+1 .. n."""
    w, n = _even_prefix(w, n)
    if n == 0:
        raise OutOfRange("n must be positive")
    return 2.0 * int(w[n // 2:n].sum(dtype=np.int64)) / n


def typical_frequency(mp):
    """Almost-sure limit of the multiple average under mu_{p,q}: 2pq / (2 + p - q)."""
    return 2.0 * mp.p * mp.q / (2.0 + mp.p - mp.q)


def typical_ones_frequency(mp):
    return 2.0 * mp.p / (2.0 + mp.p - mp.q)
