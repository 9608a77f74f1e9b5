"""Seeded sampling of states from the probability simplex.

Every trial ``k`` of a run with seed ``seed`` draws from its own stream,
derived from ``(seed, k)``, so the outcome of a trial does not depend on
which process evaluates it or in what order.
"""

import operator

import numpy as np

from relentbound.core import ProbVector


def trial_rng(seed, k):
    """Returns the random generator of trial ``k`` in a run seeded with
    ``seed``.
    """
    return np.random.default_rng(
        np.random.SeedSequence(seed, spawn_key=(operator.index(k),)))


def draw_simplex(rng, d):
    """Draws a flat-Dirichlet sample of dimension ``d`` from ``rng`` by
    normalizing independent standard exponential variates.
    """
    weights = rng.standard_exponential(d)
    return ProbVector(weights / weights.sum())


def draw_full_support(rng, d):
    """Like :py:func:`draw_simplex`, redrawing the (probability zero) samples
    that have a vanishing entry.
    """
    while True:
        p = draw_simplex(rng, d)
        if p.is_full_support():
            return p


def sample_simplex(d, n, seed):
    """Returns ``n`` independent uniform samples from the simplex of
    dimension ``d``; sample ``k`` comes from the stream of trial ``k``.
    """
    d = operator.index(d)
    n = operator.index(n)
    if d < 1:
        raise ValueError('dimension must be positive')
    if n < 1:
        raise ValueError('need at least one sample')
    return [draw_simplex(trial_rng(seed, k), d) for k in range(n)]
