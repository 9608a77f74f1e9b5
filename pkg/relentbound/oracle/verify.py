"""Random-state oracles for the relative entropy and variance bounds.

The relative entropy oracle samples arbitrary pairs of states, not just the
two-level family the solver works with, and moves the first state along a
mixing path until the entropy difference hits a random target.  Along the
path toward the uniform state the entropy increases strictly, along the path
toward the point mass on the largest entry it decreases strictly, so the
target is found by bisection whenever it is reachable.
"""

import functools
import logging
import math

import numpy as np
from scipy.optimize import bisect

from relentbound.bound import compute_M, compute_N, optimal_pair
from relentbound.bound.curve import check_dim
from relentbound.core import (
    ProbVector, relative_entropy, shannon_entropy, surprisal_variance,
)
from .report import TrialOutcome, run_trials, summarize
from .sampling import draw_full_support, draw_simplex, trial_rng

logger = logging.getLogger(__name__)

M_TOLERANCE = 1e-7
M_WITNESS_TOLERANCE = 1e-8
VARIANCE_TOLERANCE = 1e-9
VARIANCE_WITNESS_TOLERANCE = 1e-10
ENTROPY_MATCH_TOLERANCE = 1e-9
# Targets stop short of log d, where matching needs a state near uniform
# against one near a point mass and the relative entropy blows up.
TARGET_CAP = 0.99
WITNESS_FRACTIONS = (-0.95, -0.6, -0.25, 0.0, 0.3, 0.6, 0.9)

M_DIMS = (2, 3, 5, 10, 50)
VARIANCE_DIMS = (2, 4, 16, 64)


def match_entropy(sigma, target):
    """Returns a state with entropy ``target`` (within ``1e-9``) on the
    mixing path from ``sigma`` toward the uniform state or toward the point
    mass on its largest entry, or None if ``target`` is out of reach.
    """
    d = sigma.dim
    start = shannon_entropy(sigma)
    if not 0.0 <= target <= math.log(d):
        return None
    if abs(start - target) <= ENTROPY_MATCH_TOLERANCE:
        return sigma
    if target > start:
        end = ProbVector.uniform(d)
    else:
        end = ProbVector.point_mass(d, int(np.argmax(sigma.probs)))

    def residual(w):
        return shannon_entropy(sigma.mix(end, w)) - target

    weight = bisect(residual, 0.0, 1.0, xtol=1e-15, maxiter=200)
    result = sigma.mix(end, weight)
    if abs(shannon_entropy(result) - target) > ENTROPY_MATCH_TOLERANCE:
        return None
    return result


def _m_gap(d, sigma, rho):
    delta = shannon_entropy(sigma) - shannon_entropy(rho)
    bound = compute_M(d, delta).value
    return relative_entropy(sigma, rho) - bound, delta


def _m_trial(d, seed, k):
    rng = trial_rng(seed, k)
    log_d = math.log(d)
    resampled = 0
    while True:
        rho = draw_full_support(rng, d)
        sigma = draw_simplex(rng, d)
        target = rng.uniform(-log_d, TARGET_CAP * log_d)
        sigma = match_entropy(sigma, shannon_entropy(rho) + target)
        if sigma is not None:
            break
        resampled += 1
    gap, delta = _m_gap(d, sigma, rho)
    return TrialOutcome(
        gap=gap,
        description=f'trial {k}: delta={delta!r} sigma={sigma!r} '
                    f'rho={rho!r}',
        resampled=resampled,
    )


def m_witness_gap(d):
    """Returns the largest absolute slack of ``D >= M`` over the optimal
    pairs at a few fixed entropy differences and over ``sigma = rho``.
    """
    log_d = math.log(d)
    rho = ProbVector.uniform(d)
    worst = abs(_m_gap(d, rho, rho)[0])
    for fraction in WITNESS_FRACTIONS:
        sigma, rho = optimal_pair(d, fraction * log_d)
        worst = max(worst, abs(_m_gap(d, sigma, rho)[0]))
    return worst


def verify_M_bound(d, n, seed, workers=1):  # noqa: N802
    """Checks ``D(sigma||rho) >= M(S(sigma) - S(rho), d)`` on ``n`` random
    pairs with entropy differences drawn uniformly from
    ``[-log d, 0.99 log d]``, and checks that the optimal pairs attain the
    bound.  Returns an :py:class:`OracleReport`.
    """
    d = check_dim(d)
    outcomes = run_trials(functools.partial(_m_trial, d), n, seed, workers)
    return summarize('M-bound', d, seed, outcomes, M_TOLERANCE,
                     witness_gap=m_witness_gap(d),
                     witness_tolerance=M_WITNESS_TOLERANCE)


def _variance_trial(d, n_value, seed, k):
    p = draw_simplex(trial_rng(seed, k), d)
    return TrialOutcome(
        gap=n_value - surprisal_variance(p),
        description=f'trial {k}: p={p!r}',
    )


def verify_variance_bound(d, n, seed, workers=1):
    """Checks ``var_p(-log p) <= N(d)`` on ``n`` random states, and checks
    that the spectrum ``(1-r_d, r_d/(d-1), ...)`` attains ``N(d)``.
    """
    d = check_dim(d)
    bound = compute_N(d)
    outcomes = run_trials(
        functools.partial(_variance_trial, d, bound.n_value), n, seed,
        workers)
    optimum = ProbVector.two_level(d, bound.r_d)
    witness_gap = abs(bound.n_value - surprisal_variance(optimum))
    return summarize('variance', d, seed, outcomes, VARIANCE_TOLERANCE,
                     witness_gap=witness_gap,
                     witness_tolerance=VARIANCE_WITNESS_TOLERANCE)


def run_suite(seed, samples, m_dims=M_DIMS, variance_dims=VARIANCE_DIMS,
              workers=1):
    """Runs both oracles over their dimension lists and returns the list of
    reports.
    """
    reports = [verify_M_bound(d, samples, seed, workers) for d in m_dims]
    reports += [verify_variance_bound(d, samples, seed, workers)
                for d in variance_dims]
    failed = [report for report in reports if not report.passed]
    if failed:
        logger.warning('oracle suite: %d of %d runs failed',
                       len(failed), len(reports))
    else:
        logger.info('oracle suite: all %d runs passed', len(reports))
    return reports
