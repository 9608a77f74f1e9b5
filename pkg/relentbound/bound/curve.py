"""The entropy curve ``g_d(s) = H2(s) + s log(d-1)``.

``g_d(s)`` is the entropy of the two-level state ``(1-s, s/(d-1), ...)``.
It increases strictly from 0 at ``s = 0`` to ``log d`` at ``s = (d-1)/d``,
with derivative ``log((1-s)/s * (d-1))``, so it can be inverted on that
interval.  The same function is the Fannes-Audenaert continuity bound
``h_d(T)``.
"""

import math
import operator

from scipy.optimize import bisect, brentq
from scipy.special import entr

from .search import bisect_increasing_array

CLAMP_TOLERANCE = 1e-9
INVERSE_TOLERANCE = 1e-13


def check_dim(d):
    """Validates a dimension for the two-parameter problems (d >= 2)."""
    d = operator.index(d)
    if d < 2:
        raise ValueError(f'dimension must be at least 2, got {d}')
    return d


def s_max(d):
    """Returns ``(d-1)/d``, the end of the monotone range of ``g_d``."""
    return (d - 1) / d


def curve_values(d, s):
    """Evaluates ``g_d`` without validation (``s`` may be an array)."""
    return entr(s) + entr(1.0 - s) + s * math.log(d - 1)


def entropy_curve(d, s):
    """Returns ``g_d(s)`` for ``s`` in ``[0, (d-1)/d]``."""
    d = check_dim(d)
    top = s_max(d)
    s = float(s)
    if not -1e-12 <= s <= top + 1e-12:
        raise ValueError(f's must lie in [0, {top!r}], got {s!r}')
    s = min(max(s, 0.0), top)
    return float(curve_values(d, s))


def entropy_curve_derivative(d, s):
    """Returns ``g_d'(s) = log((1-s)/s * (d-1))`` for interior ``s``."""
    return math.log((1.0 - s) / s * (d - 1))


def _clamp_value(d, v):
    top = math.log(d)
    v = float(v)
    if not -CLAMP_TOLERANCE <= v <= top + CLAMP_TOLERANCE:
        raise ValueError(f'value must lie in [0, log {d}], got {v!r}')
    return min(max(v, 0.0), top)


def entropy_curve_inverse(d, v):
    """Returns the unique ``s`` in ``[0, (d-1)/d]`` with ``g_d(s) = v``,
    found by bisection to a bracket of ``1e-13``.  Values within ``1e-9``
    outside ``[0, log d]`` are clamped.
    """
    d = check_dim(d)
    v = _clamp_value(d, v)
    top = s_max(d)
    if v == 0.0:
        return 0.0
    if v == math.log(d):
        return top
    return bisect(lambda s: curve_values(d, s) - v, 0.0, top,
                  xtol=INVERSE_TOLERANCE, maxiter=200)


def invert_curve_fast(d, v):
    """Like ``entropy_curve_inverse``, for trusted in-range input.  Uses
    Brent's bracketing method, which needs far fewer evaluations.
    """
    top = s_max(d)
    if v <= 0.0:
        return 0.0
    if v >= math.log(d):
        return top
    return brentq(lambda s: curve_values(d, s) - v, 0.0, top,
                  xtol=1e-15, maxiter=200)


def invert_curve_array(d, values):
    """Vectorized inverse for an array of in-range values."""
    return bisect_increasing_array(
        lambda s: curve_values(d, s), values, 0.0, s_max(d),
        INVERSE_TOLERANCE)
