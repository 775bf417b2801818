"""Independent checks of the solver: Monte Carlo, exhaustive enumeration, grid search.

None of these route through the critical-point equation; they only use the
measures themselves and the dimension functional.
"""
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from . import kernels
from .errors import DegenerateParams, NonZeroQ, OddPrefix, OutOfRange
from .ifs import as_word, count_ones, count_pattern11, log_diameter
from .measure import (
    MeasureParams,
    entropy_decomposition,
    log_measure_from_counts,
    sample_paths,
    typical_frequency,
)
from .solver import dimension_functional, dimension_functional_array, gamma_q_of_p_array, p_min


@dataclass
class VerificationReport:
    name: str
    target: float
    estimate: float
    tolerance: float
    n_used: int = 0
    seeds_used: int = 0
    passed: bool = field(init=False)
    details: str = ""

    def __post_init__(self):
        self.passed = bool(abs(self.estimate - self.target) <= self.tolerance)

    def as_dict(self):
        return asdict(self)


def _require_even(n):
    if n % 2:
        raise OddPrefix(f"n must be even, got {n}")


def mc_frequency_check(mp, n, n_paths, base_seed):
    """Mean of (2/n) X_11^n over independent paths against 2pq / (2 + p - q)."""
    _require_even(n)
    if n < 1 << 10 or n_paths < 16:
        raise OutOfRange("need n >= 2**10 and n_paths >= 16")
    paths = sample_paths(mp, n, n_paths, base_seed)
    half = n // 2
    x11 = np.count_nonzero(paths[:, :half] & paths[:, 1:n:2], axis=1)
    per_path = 2.0 * x11 / n
    tol = 5.0 * (n * n_paths / 4.0) ** -0.5 + 10.0 / n
    return VerificationReport(
        "mc_frequency",
        typical_frequency(mp),
        float(per_path.mean()),
        tol,
        n_used=n,
        seeds_used=n_paths,
        details=f"p={mp.p!r} q={mp.q!r} path_std={per_path.std(ddof=1) if n_paths > 1 else 0.0:.3e}",
    )


def mc_local_dimension(params, mp, n, n_paths, base_seed, tolerance=0.02):
    """Mean of log mu(C_n) / log diam(pi C_n) along sampled paths against D(p, q)."""
    if not (0.02 < mp.p < 0.98 and 0.02 < mp.q < 0.98):
        raise DegenerateParams(f"(p, q) = ({mp.p}, {mp.q}) outside (0.02, 0.98)^2")
    if n < 1 << 14:
        raise OutOfRange("need n >= 2**14")
    paths = sample_paths(mp, n, n_paths, base_seed)
    counts = kernels.word_counts(paths, n)
    log_mu = log_measure_from_counts(mp, counts)
    ones = paths.sum(axis=1, dtype=np.int64)
    log_diam = -(params.lambda1 * ones + params.lambda0 * (n - ones))
    ratios = log_mu / log_diam
    return VerificationReport(
        "mc_local_dimension",
        dimension_functional(params, mp),
        float(ratios.mean()),
        tolerance,
        n_used=n,
        seeds_used=n_paths,
        details=f"p={mp.p!r} q={mp.q!r} ratio_std={ratios.std():.3e}",
    )


def enumerate_check(mp, n_max):
    """Exhaustive normalisation and parent = child0 + child1 checks for n <= n_max."""
    if not 0 <= n_max <= 20:
        raise OutOfRange("n_max must lie in [0, 20]")
    worst = 0.0
    forbidden_mass = 0.0
    prev = np.array([1.0])  # the empty word
    for n in range(1, n_max + 1):
        counts = kernels.enumerate_counts(n)
        mu = np.exp(log_measure_from_counts(mp, counts))
        worst = max(worst, abs(mu.sum() - 1.0))
        worst = max(worst, float(np.max(np.abs(prev - mu[0::2] - mu[1::2]))))
        if mp.q == 0.0:
            forbidden_mass = max(forbidden_mass, float(mu[counts[:, kernels.P11] > 0].sum(initial=0.0)))
        prev = mu
    details = f"p={mp.p!r} q={mp.q!r}"
    if mp.q == 0.0:
        details += f" forbidden_mass={forbidden_mass!r}"
        worst = max(worst, forbidden_mass)
    return VerificationReport("enumerate", 0.0, float(worst), 1e-10, n_used=n_max, details=details)


def grid_maximize_D(params, alpha, grid_size):
    """Brute-force argmax of D along gamma_alpha on a uniform grid in p."""
    if not 0.0 < alpha < 1.0:
        raise OutOfRange(f"alpha must lie in (0, 1), got {alpha}")
    if grid_size < 1000:
        raise OutOfRange("grid_size must be at least 1000")
    p = grid_points(alpha, grid_size)
    q = gamma_q_of_p_array(alpha, p)
    d = dimension_functional_array(params, p, q)
    i = int(np.argmax(d))
    return float(p[i]), float(q[i]), float(d[i])


def grid_points(alpha, grid_size):
    """Uniform open grid on (p_min(alpha), 1)."""
    lo = p_min(alpha)
    return lo + (1.0 - lo) * np.arange(1, grid_size + 1) / (grid_size + 1)


def grid_step(alpha, grid_size):
    return (1.0 - p_min(alpha)) / (grid_size + 1)


def golden_membership_check(mp, n, n_paths, base_seed):
    """Samples of mu_p never show w_k = w_2k = 1."""
    if mp.q != 0.0:
        raise NonZeroQ(f"golden-shift measure needs q = 0, got {mp.q}")
    _require_even(n)
    paths = sample_paths(mp, n, n_paths, base_seed)
    hits = int(np.count_nonzero(paths[:, : n // 2] & paths[:, 1:n:2]))
    return VerificationReport(
        "golden_membership", 0.0, float(hits), 0.0, n_used=n, seeds_used=n_paths,
        details=f"p={mp.p!r}",
    )


def telescope_residual(params, point, w, n):
    """(1/n) (l_n * dim - h_n) computed from the cylinder itself."""
    _require_even(n)
    mp = MeasureParams(point.p, point.q)
    if not mp.interior:
        raise DegenerateParams(f"(p, q) = ({point.p}, {point.q}) on the boundary")
    w = as_word(w)
    h = entropy_decomposition(mp, w, n)
    ell = -log_diameter(params, w[:n])
    return (ell * point.dimension - h) / n


def telescope_summands(point, w, n):
    """The same quantity as :func:`telescope_residual`, as the two-summand closed form."""
    _require_even(n)
    p, q, alpha = point.p, point.q, point.alpha
    if not (0.0 < p < 1.0 and 0.0 < q < 1.0):
        raise DegenerateParams(f"(p, q) = ({p}, {q}) on the boundary")
    log_r = math.log(p) + math.log1p(-q) - math.log1p(-p) - math.log(q)
    first = (alpha / 2.0 - count_pattern11(w, n) / n) * log_r
    second = 0.5 * (count_ones(w, n // 2) / (n / 2) - count_ones(w, n) / n) * (math.log1p(-q) - math.log1p(-p))
    return first + second
