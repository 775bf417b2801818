"""Bracketed bisection for the strictly monotone equations of the solver."""
import math

from .errors import NoConvergence


def bisect(f, a, b, tol=1e-12, max_iter=200, fa=None, fb=None):
    """Root of ``f`` in ``[a, b]`` where ``f(a)`` and ``f(b)`` differ in sign.

    Stops once ``|f(x)| <= tol`` or the bracket has shrunk to adjacent
    floats, and returns the bracket end with the smaller residual in the
    latter case. Raises :class:`NoConvergence` if neither happens within
    ``max_iter`` halvings or if the bracket does not change sign.
    """
    fa = f(a) if fa is None else fa
    fb = f(b) if fb is None else fb
    if fa == 0:
        return a
    if fb == 0:
        return b
    if math.isnan(fa) or math.isnan(fb) or (fa > 0) == (fb > 0):
        raise NoConvergence(f"no sign change on [{a!r}, {b!r}]: f = ({fa!r}, {fb!r})")
    for _ in range(max_iter):
        m = 0.5 * (a + b)
        if m <= a or m >= b:
            return a if abs(fa) <= abs(fb) else b
        fm = f(m)
        if abs(fm) <= tol:
            return m
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b, fb = m, fm
    raise NoConvergence(f"bisection did not converge in {max_iter} iterations")
