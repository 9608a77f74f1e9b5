"""Residuals of the first-order optimality conditions at the solver's
optimum.

At an interior minimizer of ``D2(s||r)`` subject to ``g_d(s) - g_d(r) =
delta`` the gradients of objective and constraint are parallel, which after
eliminating the multiplier reads ``a b = c e`` with

- ``a = log((1-r)/r) - log((1-s)/s)`` (derivative of ``D2`` in ``s``),
- ``b = log(d-1) + log((1-r)/r)`` (``g_d'(r)``),
- ``c = s/r - (1-s)/(1-r)`` (minus the derivative of ``D2`` in ``r``),
- ``e = log(d-1) + log((1-s)/s)`` (``g_d'(s)``).
"""

import math

from attr import attrib, attrs

from relentbound.bound import compute_M
from relentbound.bound.curve import (
    check_dim, curve_values, entropy_curve_derivative,
)

BOUNDARY_THRESHOLD = 1e-10
MIN_DELTA = 1e-6


@attrs(slots=True, frozen=True)
class StationarityResidual:
    """Residuals at the optimum ``(s, r)`` found by ``compute_M``.

    ``f_residual`` is None when the optimum lies on the boundary ``s = 0``
    or ``r = 0``, where the interior conditions do not apply; ``boundary``
    is then True.
    """

    d = attrib()
    delta = attrib()
    s = attrib()
    r = attrib()
    constraint_residual = attrib()
    f_residual = attrib()
    boundary = attrib()


def check_stationarity(d, delta):
    """Evaluates the constraint residual ``g_d(s) - g_d(r) - delta`` and the
    normalized gradient-alignment residual
    ``(a b - c e) / ((1+|a|)(1+|b|) + (1+|c|)(1+|e|))`` at the optimizer of
    ``M(delta, d)``.
    """
    d = check_dim(d)
    delta = float(delta)
    log_d = math.log(d)
    if not -log_d < delta < log_d:
        raise ValueError('delta must lie strictly inside (-log d, log d)')
    if abs(delta) <= MIN_DELTA:
        raise ValueError(f'|delta| must exceed {MIN_DELTA}')
    result = compute_M(d, delta)
    s, r = result.s_opt, result.r_opt
    constraint = float(curve_values(d, s) - curve_values(d, r)) - delta
    if min(s, r) <= BOUNDARY_THRESHOLD:
        return StationarityResidual(d, delta, s, r, constraint, None, True)

    b = entropy_curve_derivative(d, r)
    e = entropy_curve_derivative(d, s)
    a = b - e
    c = s / r - (1 - s) / (1 - r)
    scale = ((1 + abs(a)) * (1 + abs(b))
             + (1 + abs(c)) * (1 + abs(e)))
    return StationarityResidual(d, delta, s, r, constraint,
                                (a * b - c * e) / scale, False)


STATIONARITY_TOLERANCE = 1e-6
SUITE_DIMS = (3, 10, 100, 1000)
SUITE_FRACTIONS = (-0.5, -0.2, 0.2, 0.5, 0.8)


def residual_ok(residual, tolerance=STATIONARITY_TOLERANCE):
    """Returns True if both residuals that apply are within ``tolerance``.
    """
    if abs(residual.constraint_residual) > tolerance:
        return False
    return residual.boundary or abs(residual.f_residual) <= tolerance


def stationarity_suite(dims=SUITE_DIMS, fractions=SUITE_FRACTIONS):
    """Checks the optimality residuals at ``delta = fraction * log d`` for
    every combination of ``dims`` and ``fractions``.
    """
    return [check_stationarity(d, fraction * math.log(d))
            for d in dims for fraction in fractions]
