"""Entropic functionals of finite probability distributions.

All logarithms are natural, so every value is in nats.  The conventions of
the extended real line apply: ``0 log 0 = 0``, and a relative entropy whose
first argument puts mass where the second has none is ``math.inf``.
"""

import math

import numpy as np
from scipy.special import entr, rel_entr

from .probvector import NEGATIVE_TOLERANCE, ProbVector


def _check_pair(p, q):
    if not isinstance(p, ProbVector) or not isinstance(q, ProbVector):
        raise TypeError('need two ProbVectors')
    if p.dim != q.dim:
        raise ValueError(
            f'mismatched dimensions {p.dim} and {q.dim}')


def _unit_interval(x, name):
    x = float(x)
    if not -NEGATIVE_TOLERANCE <= x <= 1 + NEGATIVE_TOLERANCE:
        raise ValueError(f'{name} must lie in [0, 1], got {x!r}')
    return min(max(x, 0.0), 1.0)


def shannon_entropy(p):
    """Returns ``-sum(p log p)``, a value in ``[0, log d]``."""
    return float(entr(p.probs).sum())


def relative_entropy(p, q):
    """Returns ``D(p||q) = sum(p log(p/q))``.  The result is ``math.inf``
    if ``p`` is not supported within the support of ``q``.
    """
    _check_pair(p, q)
    value = float(rel_entr(p.probs, q.probs).sum())
    if value == math.inf:
        return math.inf
    # Rounding can leave a tiny negative sum for equal arguments.
    return max(value, 0.0)


def binary_entropy(x):
    """Returns the entropy of the binary distribution ``(x, 1-x)``."""
    x = _unit_interval(x, 'x')
    return float(entr(x) + entr(1.0 - x))


def binary_relative_entropy(x, y):
    """Returns the relative entropy between the binary distributions
    ``(x, 1-x)`` and ``(y, 1-y)``.
    """
    x = _unit_interval(x, 'x')
    y = _unit_interval(y, 'y')
    value = float(rel_entr(x, y) + rel_entr(1.0 - x, 1.0 - y))
    if value == math.inf:
        return math.inf
    return max(value, 0.0)


def surprisal_variance(p):
    """Returns the variance of the surprisal ``-log p`` under ``p``.
    Zero-probability entries do not contribute.
    """
    probs = p.probs[p.support]
    surprisal = -np.log(probs)
    mean = float(np.dot(probs, surprisal))
    return float(np.dot(probs, (surprisal - mean) ** 2))


def trace_distance(p, q):
    """Returns half the l1 distance (total variation distance)."""
    _check_pair(p, q)
    return float(0.5 * np.abs(p.probs - q.probs).sum())
