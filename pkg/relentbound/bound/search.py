"""Scalar root finding and minimization used by the bound solvers."""

import math

import numpy as np

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2


def bisect_increasing_array(f, targets, a, b, tol):
    """Vectorized bisection: for each entry of ``targets`` finds ``x`` in
    ``[a, b]`` with ``f(x) = target``, where ``f`` is an increasing ufunc-like
    function.  All entries take the same number of halvings.
    """
    targets = np.asarray(targets, dtype=float)
    lo = np.full(targets.shape, float(a))
    hi = np.full(targets.shape, float(b))
    steps = max(0, math.ceil(math.log2((b - a) / tol)))
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        below = f(mid) < targets
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    return 0.5 * (lo + hi)


def golden_section(f, a, b, tol):
    """Golden-section search.

    Given a function ``f`` with a single local minimum in the interval
    ``[a, b]``, returns a subset interval ``(c, d)`` that contains the
    minimum with ``d - c <= tol``, and the number of iterations taken.
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        return (a, b), 0

    # Required steps to achieve tolerance
    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(n - 1):
        if yc < yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    if yc < yd:
        return (a, d), n
    else:
        return (c, b), n
