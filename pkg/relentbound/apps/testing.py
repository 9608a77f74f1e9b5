"""Chernoff information of symmetric hypothesis testing."""

import logging
import math

import numpy as np
from attr import attrib, attrs
from scipy.special import logsumexp

from relentbound.bound.curve import check_dim
from relentbound.bound.search import golden_section
from relentbound.core import shannon_entropy
from .channel import gap_bound

logger = logging.getLogger(__name__)

EXPONENT_TOLERANCE = 1e-12


@attrs(slots=True, frozen=True)
class ChernoffResult:
    """The Chernoff information ``xi`` of two distributions, the exponent
    ``s_opt`` attaining it, and its lower bound in terms of the entropy
    difference.
    """

    xi = attrib()
    s_opt = attrib()
    lower_bound = attrib()


def chernoff(p, q):
    """Computes ``xi = -log min_{0<=s<=1} sum_i p_i^s q_i^(1-s)``.

    The logarithm of the sum is convex in ``s``, so golden-section search
    finds the minimum; the endpoints are compared explicitly since the
    minimum may sit there.  At the endpoints the sum is taken as its limit,
    restricted to the common support.  Disjoint supports give
    ``xi = inf``.  The lower bound is
    ``G^2 / (2K) - G^3 / (3K^2)`` with ``G = |S(p) - S(q)|`` and
    ``K = log^2(d-1) + 4``.
    """
    if p.dim != q.dim:
        raise ValueError(f'mismatched dimensions {p.dim} and {q.dim}')
    d = check_dim(p.dim)
    lower_bound = gap_bound(abs(shannon_entropy(p) - shannon_entropy(q)), d)
    common = p.support & q.support
    if not np.any(common):
        return ChernoffResult(math.inf, math.nan, lower_bound)
    log_p = np.log(p.probs[common])
    log_q = np.log(q.probs[common])

    def log_affinity(s):
        return float(logsumexp(s * log_p + (1 - s) * log_q))

    (a, b), iterations = golden_section(log_affinity, 0.0, 1.0,
                                        EXPONENT_TOLERANCE)
    s_opt = min((0.5 * (a + b), 0.0, 1.0), key=log_affinity)
    xi = max(-log_affinity(s_opt), 0.0)
    logger.debug('chernoff information %r at s=%r (%d golden steps)',
                 xi, s_opt, iterations)
    return ChernoffResult(xi, s_opt, lower_bound)
