"""Dimension spectrum alpha -> dim_H L_alpha.

For alpha in (0, 1) the maximiser of the dimension functional

    D(p, q) = ((2 - q) H(p) + p H(q)) / (2 p lambda1 + (2 - p - q) lambda0)

along the curve gamma_alpha = {2pq = alpha (2 + p - q)} is the unique zero of

    F = alpha (lambda1 - lambda0) log(p(1-q) / ((1-p) q))
        + lambda0 log(p^2 (1-q) / (1-p)) - 2 lambda1 log(1-p),

which increases strictly along the curve from -inf (q -> 1) to +inf (p -> 1),
so a plain bisection bracket always exists. alpha = 0 reduces to the
one-parameter family mu_p and alpha = 1 to the point (1, 1).
"""
import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import (
    BoundaryParams,
    DegenerateDenominator,
    EqualExponents,
    NoConvergence,
    NotOnCurve,
    OutOfCurveDomain,
    OutOfRange,
    SpectrumError,
)
from .ifs import attractor_dimension
from .measure import MeasureParams
from .roots import bisect

_EDGE_EPS = 1e-13
# successively closer approaches to an endpoint where F diverges
_LOW_EPS = (_EDGE_EPS, 1e-16, 1e-24, 1e-48, 1e-96, 1e-192, 1e-300)
_HIGH_EPS = (_EDGE_EPS, 1e-14, 1e-15, 2.0 ** -53)


@dataclass(frozen=True)
class SolverConfig:
    tolerance: float = 1e-12
    max_iterations: int = 200

    def __post_init__(self):
        if not self.tolerance >= 1e-15:
            raise OutOfRange(f"tolerance must be >= 1e-15, got {self.tolerance}")
        if self.max_iterations < 10:
            raise OutOfRange(f"max_iterations must be >= 10, got {self.max_iterations}")


DEFAULT_CONFIG = SolverConfig()


@dataclass(frozen=True)
class SpectrumPoint:
    alpha: float
    p: float
    q: float
    dimension: float
    residual_f: float
    formula_spread: float
    error: str | None = None

    def as_dict(self):
        return asdict(self)


# ------------------------------------------------------------------ functionals

def entropy(p):
    """Binary entropy in nats, H(0) = H(1) = 0."""
    if not 0.0 <= p <= 1.0:
        raise OutOfRange(f"entropy argument must lie in [0, 1], got {p}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log(p) - (1.0 - p) * math.log1p(-p)


def entropy_array(p):
    p = np.asarray(p, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        h = -p * np.log(p) - (1.0 - p) * np.log1p(-p)
    return np.where((p <= 0.0) | (p >= 1.0), 0.0, h)


def dimension_functional(params, mp):
    """Hausdorff dimension of the projected measure nu_{p,q}."""
    p, q = mp.p, mp.q
    den = 2.0 * p * params.lambda1 + (2.0 - p - q) * params.lambda0
    if den <= 0.0:
        raise DegenerateDenominator(f"denominator vanishes at (p, q) = ({p}, {q})")
    return ((2.0 - q) * entropy(p) + p * entropy(q)) / den


def dimension_functional_array(params, p, q):
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    num = (2.0 - q) * entropy_array(p) + p * entropy_array(q)
    return num / (2.0 * p * params.lambda1 + (2.0 - p - q) * params.lambda0)


# ------------------------------------------------------------------ the curve gamma_alpha

def p_min(alpha):
    """p-coordinate of the q = 1 end of gamma_alpha."""
    return alpha / (2.0 - alpha)


def gamma_q_of_p(alpha, p):
    if not 0.0 < alpha <= 1.0:
        raise OutOfRange(f"alpha must lie in (0, 1], got {alpha}")
    if not 0.0 <= p <= 1.0:
        raise OutOfCurveDomain(f"p must lie in [0, 1], got {p}")
    q = alpha * (2.0 + p) / (2.0 * p + alpha)
    if q > 1.0 + 1e-15:
        raise OutOfCurveDomain(f"p = {p} < p_min({alpha}) = {p_min(alpha)} gives q = {q} > 1")
    return min(q, 1.0)


def gamma_q_of_p_array(alpha, p):
    p = np.asarray(p, dtype=np.float64)
    return alpha * (2.0 + p) / (2.0 * p + alpha)


def curve_residual(alpha, p, q):
    return 2.0 * p * q - alpha * (2.0 + p - q)


def _curve_logs(alpha, t):
    """(p, q, log p, log(1-p), log q, log(1-q)) at p = p_min + t (1 - p_min), without cancellation."""
    pm = p_min(alpha)
    one_minus_pm = (2.0 - 2.0 * alpha) / (2.0 - alpha)
    p = pm + t * one_minus_pm
    den = 2.0 * p + alpha
    q = alpha * (2.0 + p) / den
    lp = math.log(p)
    l1p = math.log1p(-t) + math.log(one_minus_pm)
    lq = math.log(alpha) + math.log(2.0 + p) - math.log(den)
    l1q = math.log(2.0 * (1.0 - alpha) * t) - math.log(den)
    return p, q, lp, l1p, lq, l1q


def _f_from_logs(params, alpha, lp, l1p, lq, l1q):
    l0, l1 = params.lambda0, params.lambda1
    log_r = lp + l1q - l1p - lq
    return alpha * (l1 - l0) * log_r + l0 * (2.0 * lp + l1q - l1p) - 2.0 * l1 * l1p


def _interior_logs(p, q):
    if not (0.0 < p < 1.0 and 0.0 < q < 1.0):
        raise BoundaryParams(f"(p, q) = ({p}, {q}) must lie in (0, 1)^2")
    return math.log(p), math.log1p(-p), math.log(q), math.log1p(-q)


def f_nice2(params, alpha, p, q):
    """Critical-point equation of D on gamma_alpha (zero at the maximiser)."""
    return _f_from_logs(params, alpha, *_interior_logs(p, q))


def f_nice(params, alpha, p, q):
    """Same equation after the substitution 2 + p - q = beta p q, beta = 2 / alpha."""
    lp, l1p, lq, l1q = _interior_logs(p, q)
    l0, l1 = params.lambda0, params.lambda1
    beta = 2.0 / alpha
    return (
        (2 * l1 + (2 * beta - 2) * l0) * lp
        + ((-2 * beta - 2) * l1 + (2 - beta) * l0) * l1p
        + (2 * l0 - 2 * l1) * lq
        + (2 * l1 + (beta - 2) * l0) * l1q
    )


def f_awful(params, p, q):
    """Expanded critical-point equation before restricting to gamma_alpha."""
    lp, l1p, lq, l1q = _interior_logs(p, q)
    l0, l1 = params.lambda0, params.lambda1
    pq = p * q
    return (
        (2 * pq * l1 + (4 + 2 * p - 2 * q - 2 * pq) * l0) * lp
        + ((-4 - 2 * p + 2 * q - 2 * pq) * l1 + (-2 - p + q + 2 * pq) * l0) * l1p
        + (2 * pq * l0 - 2 * pq * l1) * lq
        + (2 * pq * l1 + (2 + p - q - 2 * pq) * l0) * l1q
    )


def a1_a2(alpha, p, q):
    """Coefficients with lambda1 * a1 + lambda0 * a2 = f_nice2."""
    lp, l1p, lq, l1q = _interior_logs(p, q)
    a1 = alpha * lp - (2.0 + alpha) * l1p - alpha * lq + alpha * l1q
    a2 = (2.0 - alpha) * lp + (alpha - 1.0) * l1p + alpha * lq + (1.0 - alpha) * l1q
    return a1, a2


def solvable_region_check(alpha, p, q):
    """True iff some positive (lambda0, lambda1) makes (p, q) a root, i.e. a1 > 0 > a2."""
    if abs(curve_residual(alpha, p, q)) > 1e-8:
        raise NotOnCurve(f"(p, q) = ({p}, {q}) is not on gamma_{alpha}")
    a1, a2 = a1_a2(alpha, p, q)
    return a1 > 0.0 > a2


# ------------------------------------------------------------------ closed forms at the root

def _exact1_logs(params, alpha, lp, l1p, lq, l1q):
    return (alpha * (lp + l1q - l1p - lq) - 2.0 * l1p) / (2.0 * params.lambda0)


def _exact2_logs(params, lp, l1p, l1q):
    return (2.0 * lp + l1q - 3.0 * l1p) / (2.0 * (params.lambda0 - params.lambda1))


def _aux_logs(params, alpha, lp, l1p, lq, l1q):
    return (alpha * (lp + l1q - l1p - lq) + l1p - 2.0 * lp - l1q) / (2.0 * params.lambda1)


def _functional_logs(params, p, q, lp, l1p, lq, l1q):
    one_minus_q = math.exp(l1q)
    hp = -p * lp - (1.0 - p) * l1p
    hq = -q * lq - one_minus_q * l1q
    return ((1.0 + one_minus_q) * hp + p * hq) / (2.0 * p * params.lambda1 + (1.0 - p + one_minus_q) * params.lambda0)


def dim_exact1(params, alpha, p, q):
    return _exact1_logs(params, alpha, *_interior_logs(p, q))


def dim_exact2(params, p, q):
    if params.equal_exponents:
        raise EqualExponents("formula undefined for lambda0 == lambda1")
    lp, l1p, _, l1q = _interior_logs(p, q)
    return _exact2_logs(params, lp, l1p, l1q)


def dim_aux(params, alpha, p, q):
    return _aux_logs(params, alpha, *_interior_logs(p, q))


# ------------------------------------------------------------------ solvers

def _bracketed_root(g, cfg):
    """Root of an increasing g on (0, 1) that diverges at both ends."""
    for lo in _LOW_EPS:
        g_lo = g(lo)
        if g_lo < 0:
            break
    else:
        raise NoConvergence("could not bracket the root near the lower end")
    for eps in _HIGH_EPS:
        hi = 1.0 - eps
        g_hi = g(hi)
        if g_hi > 0:
            break
    else:
        raise NoConvergence("could not bracket the root near the upper end")
    return bisect(g, lo, hi, tol=cfg.tolerance, max_iter=cfg.max_iterations, fa=g_lo, fb=g_hi)


def golden_equation(params, p):
    """2 lambda0 log p - (2 lambda1 + lambda0) log(1 - p); increasing in p."""
    return 2.0 * params.lambda0 * math.log(p) - (2.0 * params.lambda1 + params.lambda0) * math.log1p(-p)


def solve_golden_p(params, cfg=DEFAULT_CONFIG):
    """The p maximising dim nu_p: p^(2 lambda0) = (1 - p)^(2 lambda1 + lambda0)."""
    return _bracketed_root(lambda p: golden_equation(params, p), cfg)


def golden_dimension(params, cfg=DEFAULT_CONFIG):
    p = solve_golden_p(params, cfg)
    return -math.log1p(-p) / params.lambda0


def _golden_point(params, cfg):
    p = solve_golden_p(params, cfg)
    dim = -math.log1p(-p) / params.lambda0
    spread = abs(dim - dimension_functional(params, MeasureParams(p, 0.0)))
    return SpectrumPoint(0.0, p, 0.0, dim, golden_equation(params, p), spread)


def solve_alpha(params, alpha, cfg=DEFAULT_CONFIG):
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise OutOfRange(f"alpha must lie in [0, 1], got {alpha}")
    if alpha == 0.0:
        return _golden_point(params, cfg)
    if alpha == 1.0:
        return SpectrumPoint(1.0, 1.0, 1.0, 0.0, 0.0, 0.0)

    def g(t):
        return _f_from_logs(params, alpha, *_curve_logs(alpha, t)[2:])

    t = _bracketed_root(g, cfg)
    p, q, *logs = _curve_logs(alpha, t)
    residual = g(t)
    # formulas from the curve logs: near alpha = 1 the root's q rounds to 1.0
    dim = _exact1_logs(params, alpha, *logs)
    others = [_functional_logs(params, p, q, *logs), _aux_logs(params, alpha, *logs)]
    if not params.equal_exponents:
        lp, l1p, _, l1q = logs
        others.append(_exact2_logs(params, lp, l1p, l1q))
    values = [dim, *others]
    spread = max(values) - min(values)
    return SpectrumPoint(alpha, p, q, dim, residual, spread)


def spectrum_sweep(params, alphas, cfg=DEFAULT_CONFIG):
    """Solve every alpha independently; failures become points carrying ``error``."""
    out = []
    for a in alphas:
        try:
            out.append(solve_alpha(params, a, cfg))
        except SpectrumError as exc:
            nan = math.nan
            out.append(SpectrumPoint(float(a), nan, nan, nan, nan, nan, f"{type(exc).__name__}: {exc}"))
    return out


def bernoulli_point(params):
    """(alpha, p) where the maximiser is the Bernoulli measure p = q.

    This is the natural measure of the attractor: P(1) = exp(-s lambda1)
    with s the similarity dimension, so alpha = p^2.
    """
    s = attractor_dimension(params)
    p = math.exp(-s * params.lambda1)
    return p * p, p


def exact_formulas(params, point):
    """All closed-form dimension values at a solved point; ``None`` where undefined.

    At alpha = 0 (q = 0) the alpha-weighted logarithm drops out and log(1 - q) = 0,
    which is how the three formulas extend to the golden-shift case.
    """
    p, q, alpha = point.p, point.q, point.alpha
    out = {"dim_exact1": None, "dim_exact2": None, "dim_aux": None, "dimension_functional": None}
    if point.error is not None:
        return out
    out["dimension_functional"] = dimension_functional(params, MeasureParams(p, q))
    if alpha == 0.0:
        l1p, lp = math.log1p(-p), math.log(p)
        out["dim_exact1"] = -l1p / params.lambda0
        out["dim_aux"] = (l1p - 2.0 * lp) / (2.0 * params.lambda1)
        if not params.equal_exponents:
            out["dim_exact2"] = (2.0 * lp - 3.0 * l1p) / (2.0 * (params.lambda0 - params.lambda1))
    elif alpha < 1.0 and q < 1.0:
        out["dim_exact1"] = dim_exact1(params, alpha, p, q)
        out["dim_aux"] = dim_aux(params, alpha, p, q)
        if not params.equal_exponents:
            out["dim_exact2"] = dim_exact2(params, p, q)
    return out
