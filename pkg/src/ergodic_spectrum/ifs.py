"""Geometry of the two-map IFS f0(x) = r0 x, f1(x) = r1 x + 1 - r1 with r_i = exp(-lambda_i).

Words are plain uint8 numpy arrays; :func:`as_word` accepts strings like
``"0110"`` or any 0/1 sequence and validates it.
"""
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    InvalidWord,
    NonPositiveExponent,
    OddPrefix,
    OpenSetViolation,
    PrefixTooShort,
    WordTooLong,
)
from .roots import bisect

MAX_WORD_LENGTH = 1 << 20
OSC_SLACK = 1e-12


@dataclass(frozen=True)
class IfsParams:
    lambda0: float
    lambda1: float

    @property
    def ratio0(self):
        return math.exp(-self.lambda0)

    @property
    def ratio1(self):
        return math.exp(-self.lambda1)

    @property
    def equal_exponents(self):
        return abs(self.lambda0 - self.lambda1) <= 1e-9 * max(self.lambda0, self.lambda1)


@dataclass(frozen=True)
class Interval:
    left: float
    length: float

    @property
    def right(self):
        return self.left + self.length


def validate_params(lambda0, lambda1):
    lambda0, lambda1 = float(lambda0), float(lambda1)
    if not (lambda0 > 0 and lambda1 > 0) or not (math.isfinite(lambda0) and math.isfinite(lambda1)):
        raise NonPositiveExponent(f"exponents must be positive and finite, got ({lambda0}, {lambda1})")
    total = math.exp(-lambda0) + math.exp(-lambda1)
    if total > 1.0 + OSC_SLACK:
        raise OpenSetViolation(f"exp(-lambda0) + exp(-lambda1) = {total:.15g} > 1")
    return IfsParams(lambda0, lambda1)


def params_from_ratios(ratio0, ratio1):
    if not (0 < ratio0 < 1 and 0 < ratio1 < 1):
        raise NonPositiveExponent(f"ratios must lie in (0, 1), got ({ratio0}, {ratio1})")
    return validate_params(-math.log(ratio0), -math.log(ratio1))


def as_word(w):
    """Return ``w`` as a validated 1-D uint8 array of 0/1 symbols."""
    if isinstance(w, str):
        if w.strip("01"):
            raise InvalidWord(f"word contains symbols other than 0/1: {w!r}")
        arr = np.frombuffer(w.encode("ascii"), dtype=np.uint8) - ord("0")
    else:
        arr = np.asarray(w)
        if arr.ndim != 1:
            raise InvalidWord("word must be one-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() > 1):
            raise InvalidWord("word contains symbols other than 0/1")
        arr = arr.astype(np.uint8, copy=False)
    if arr.size > MAX_WORD_LENGTH:
        raise WordTooLong(f"word length {arr.size} exceeds {MAX_WORD_LENGTH}")
    return arr


def word_str(w):
    return "".join("1" if s else "0" for s in as_word(w))


def _prefix(w, n):
    w = as_word(w)
    if n is None:
        return w, w.size
    if n < 0 or n > w.size:
        raise PrefixTooShort(f"prefix length {n} not available in word of length {w.size}")
    return w, int(n)


def _even_prefix(w, n):
    w, n = _prefix(w, n)
    if n % 2:
        raise OddPrefix(f"prefix length must be even, got {n}")
    return w, n


def project_word(params, w):
    """Image of [0, 1] under f_{w1} o ... o f_{wn}."""
    w = as_word(w)
    r = np.where(w == 1, params.ratio1, params.ratio0)
    offset = np.where(w == 1, 1.0 - params.ratio1, 0.0)
    scale = np.concatenate(([1.0], np.cumprod(r)))
    left = float(np.sum(scale[:-1] * offset))
    return Interval(left, float(scale[-1]))


def log_diameter(params, w):
    w = as_word(w)
    ones = int(w.sum(dtype=np.int64))
    return -(params.lambda1 * ones + params.lambda0 * (w.size - ones))


def count_ones(w, n=None):
    w, n = _prefix(w, n)
    return int(w[:n].sum(dtype=np.int64))


def count_pattern11(w, n=None):
    """Number of k <= n/2 with w_k = w_2k = 1."""
    w, n = _even_prefix(w, n)
    half = n // 2
    return int(np.count_nonzero(w[:half] & w[1:n:2]))


def attractor_dimension(params, tol=1e-14):
    """Similarity dimension s in (0, 1]: exp(-s lambda0) + exp(-s lambda1) = 1."""
    if math.exp(-params.lambda0) + math.exp(-params.lambda1) >= 1.0:
        return 1.0

    def moran(s):
        return 1.0 - math.exp(-s * params.lambda0) - math.exp(-s * params.lambda1)

    return bisect(moran, 0.0, 1.0, tol=tol)
