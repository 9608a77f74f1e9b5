"""Numerical evidence on the asymmetry of ``M`` in the sign of ``delta``.

It is conjectured, but not known, that ``M(delta, d) >= M(-delta, d)`` for
``delta >= 0``.  The scan below reports the smallest difference over a grid
and never treats a negative value as an error.  A stronger statement, that
the optimal ``D2(s||r)`` is bounded by the reversed ``D2(r||s)``, fails at
``d = 1000, delta = 6``; :py:func:`pair_asymmetry` exhibits it.
"""

import logging
import math

import numpy as np
from attr import attrib, attrs

from relentbound.bound import compute_M
from relentbound.bound.curve import check_dim
from relentbound.core import binary_relative_entropy

logger = logging.getLogger(__name__)


@attrs(slots=True, frozen=True)
class ConjectureScan:
    """The minimum ``min_diff`` of ``M(delta, d) - M(-delta, d)`` over
    ``grid_n`` points in ``(0, log d)`` and where it occurs.
    """

    d = attrib()
    grid_n = attrib()
    min_diff = attrib()
    argmin_delta = attrib()


@attrs(slots=True, frozen=True)
class PairAsymmetry:
    """``D2(s||r)`` (``forward``, equal to ``M(delta, d)``) and ``D2(r||s)``
    (``backward``) at the optimal pair of ``M(delta, d)``.
    """

    d = attrib()
    delta = attrib()
    s = attrib()
    r = attrib()
    forward = attrib()
    backward = attrib()


def conjecture_scan(d, grid_n):
    """Scans ``M(delta, d) - M(-delta, d)`` over the points
    ``log d * i / (grid_n + 1)``, ``i = 1 .. grid_n``.
    """
    d = check_dim(d)
    if grid_n < 1:
        raise ValueError('need at least one grid point')
    deltas = np.linspace(0.0, math.log(d), grid_n + 2)[1:-1]
    diffs = [compute_M(d, delta).value - compute_M(d, -delta).value
             for delta in deltas]
    idx = int(np.argmin(diffs))
    scan = ConjectureScan(d, grid_n, float(diffs[idx]), float(deltas[idx]))
    logger.info('asymmetry scan d=%d: min M(x)-M(-x) = %r at x=%r',
                d, scan.min_diff, scan.argmin_delta)
    return scan


def pair_asymmetry(d, delta):
    """Returns the :py:class:`PairAsymmetry` at ``M(delta, d)``."""
    result = compute_M(d, delta)
    if not result.finite:
        raise ValueError('no finite optimal pair at delta = log d')
    s, r = result.s_opt, result.r_opt
    return PairAsymmetry(
        d=result.d,
        delta=result.delta,
        s=s,
        r=r,
        forward=result.value,
        backward=binary_relative_entropy(r, s),
    )
