"""The tight lower bound ``M(delta, d)`` on relative entropy.

``M(delta, d)`` is the minimum of ``D2(s||r)`` over ``s, r`` in
``[0, (d-1)/d]`` subject to ``g_d(s) - g_d(r) = delta``.  Since ``g_d`` is
strictly increasing there, ``r`` is a function of ``s`` and the problem is
a one-dimensional minimization over the admissible ``s``-interval.  The
objective need not be unimodal in ``s``, so a uniform grid brackets the
minimum before golden-section refinement.
"""

import enum
import logging
import math

import numpy as np
from attr import attrib, attrs
from scipy.special import rel_entr

from relentbound.core import ProbVector, binary_relative_entropy
from .curve import (
    CLAMP_TOLERANCE, check_dim, curve_values, invert_curve_array,
    invert_curve_fast, s_max,
)
from .search import golden_section
from .variance import compute_N

logger = logging.getLogger(__name__)

GRID_POINTS = 4096
BRACKET_TOLERANCE = 1e-12
ZERO_DELTA = 1e-12
# M rises like a square root from -log d, so entropy differences that miss
# -log d by rounding alone are treated as the endpoint.
ENDPOINT_SNAP = 1e-12
# M diverges at log d and the optimal r is below float resolution this
# close to it, so such differences are reported as the endpoint's inf.
UPPER_SNAP = 1e-12
TIE_TOLERANCE = 1e-10


class Status(enum.Enum):
    """Whether a bound value is a finite number or ``+inf``."""
    FINITE = 'Finite'
    INFINITE = 'Infinite'


@attrs(slots=True, frozen=True)
class BoundResult:
    """Represents the value of ``M(delta, d)`` and the minimizing pair.

    ``iterations`` counts golden-section steps, ``residual`` is the final
    bracket width in ``s``.  ``alternatives`` lists other ``(s, r)`` pairs
    found by the grid scan with an objective within ``1e-10`` of the
    optimum; it is empty when the minimizer is unique.
    """

    d = attrib()
    delta = attrib()
    value = attrib()
    s_opt = attrib()
    r_opt = attrib()
    status = attrib()
    iterations = attrib(default=0)
    residual = attrib(default=0.0)
    alternatives = attrib(default=())

    @property
    def finite(self):
        return self.status is Status.FINITE


def _objective_array(s, r):
    return rel_entr(s, r) + rel_entr(1.0 - s, 1.0 - r)


def clamp_delta(d, delta):
    """Clamps ``delta`` into ``[-log d, log d]`` if it is within ``1e-9``
    of that interval and rejects it otherwise.
    """
    top = math.log(d)
    delta = float(delta)
    if math.isnan(delta) or abs(delta) > top + CLAMP_TOLERANCE:
        raise ValueError(
            f'entropy difference {delta!r} outside [-log {d}, log {d}]')
    return min(max(delta, -top), top)


def _partner(d, delta, s):
    """Returns ``r`` with ``g_d(r) = g_d(s) - delta``."""
    return invert_curve_fast(d, float(curve_values(d, s)) - delta)


def _local_minima(values):
    """Returns grid indices that are local minima of ``values``."""
    padded = np.concatenate(([np.inf], values, [np.inf]))
    left = padded[1:-1] <= padded[:-2]
    right = padded[1:-1] <= padded[2:]
    return np.flatnonzero(left & right)


def compute_M(d, delta):  # noqa: N802
    """Computes ``M(delta, d)`` for ``d >= 2`` and ``delta`` in
    ``[-log d, log d]`` and returns a :py:class:`BoundResult`.

    The endpoints have closed forms: ``M(-log d, d) = log d`` attained at
    ``(s, r) = (0, (d-1)/d)``, and ``M(log d, d) = inf`` at
    ``((d-1)/d, 0)``.  For ``abs(delta) < 1e-12`` the value is 0 with
    ``s = r = r_d``.  A ``delta`` within ``1e-12`` of either endpoint counts
    as that endpoint and is reported as exactly ``-log d`` or ``log d``.
    """
    d = check_dim(d)
    delta = clamp_delta(d, delta)
    log_d = math.log(d)
    top = s_max(d)
    if abs(delta) < ZERO_DELTA:
        r_d = compute_N(d).r_d
        return BoundResult(d, delta, 0.0, r_d, r_d, Status.FINITE)
    if delta <= -log_d + ENDPOINT_SNAP:
        return BoundResult(d, -log_d, log_d, 0.0, top, Status.FINITE)
    if delta >= log_d - UPPER_SNAP:
        return BoundResult(d, log_d, math.inf, top, 0.0, Status.INFINITE)

    # Admissible s: g_d(s) - delta must stay inside [0, log d].
    if delta > 0:
        s_lo, s_hi = invert_curve_fast(d, delta), top
    else:
        s_lo, s_hi = 0.0, invert_curve_fast(d, log_d + delta)

    grid = np.linspace(s_lo, s_hi, GRID_POINTS)
    targets = np.clip(curve_values(d, grid) - delta, 0.0, log_d)
    partners = invert_curve_array(d, targets)
    values = _objective_array(grid, partners)
    best = int(np.argmin(values))

    alternatives = []
    for idx in _local_minima(values):
        if abs(int(idx) - best) > 1 and \
                values[idx] - values[best] <= TIE_TOLERANCE:
            alternatives.append((float(grid[idx]), float(partners[idx])))
    if alternatives:
        logger.warning(
            'M(%r, %d): %d separated minima within %g of the best',
            delta, d, len(alternatives) + 1, TIE_TOLERANCE)

    def objective(s):
        return binary_relative_entropy(s, _partner(d, delta, s))

    lo = grid[max(best - 1, 0)]
    hi = grid[min(best + 1, GRID_POINTS - 1)]
    (a, b), iterations = golden_section(objective, lo, hi,
                                        BRACKET_TOLERANCE)
    # The bracket ends may be boundary minima (s = 0 for very negative
    # delta), so they compete with the midpoint.
    s_opt = float(min((0.5 * (a + b), a, b), key=objective))
    r_opt = _partner(d, delta, s_opt)
    value = binary_relative_entropy(s_opt, r_opt)
    logger.debug('M(%r, %d) = %r at s=%r r=%r (%d golden steps)',
                 delta, d, value, s_opt, r_opt, iterations)
    status = Status.FINITE if value < math.inf else Status.INFINITE
    return BoundResult(d, delta, value, s_opt, r_opt, status,
                       iterations=iterations, residual=float(b - a),
                       alternatives=tuple(alternatives))


def optimal_pair(d, delta):
    """Returns states ``(sigma, rho)`` with ``S(sigma) - S(rho) = delta``
    and ``D(sigma||rho) = M(delta, d)``.  Not defined at ``delta = log d``,
    where ``rho`` degenerates to a point mass and the bound is infinite.
    """
    result = compute_M(d, delta)
    if not result.finite:
        raise ValueError('no finite optimal pair at delta = log d')
    return (ProbVector.two_level(d, result.s_opt),
            ProbVector.two_level(d, result.r_opt))
