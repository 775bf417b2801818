"""Numba switch.

Set ``ERGODIC_SPECTRUM_DISABLE_NUMBA=1`` to force the pure-numpy kernels.
If numba is not importable the numpy path is used silently.
"""
import os

_FLAG = "ERGODIC_SPECTRUM_DISABLE_NUMBA"

try:
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get(_FLAG, "").strip().lower() not in ("1", "true", "yes", "on")


def njit(fn):
    """``numba.njit`` with the project options, or the function itself without numba."""
    if not HAVE_NUMBA:
        return fn
    return _njit(cache=True, nogil=True, error_model="numpy")(fn)
