"""Discrete memoryless channels: capacity and an entropy-gap lower bound.

A channel is stored row-stochastically: row ``x`` is the output
distribution ``T(.|x)`` for input ``x``.  (Texts that write channels as
column-stochastic matrices call these the columns.)  The capacity equals the
minimax redundancy of coding for the family of row distributions, which the
relative entropy bound turns into a lower bound depending only on the
largest and smallest row entropies.
"""

import itertools
import logging
import math

import numpy as np
from attr import attrib, attrs
from scipy.special import rel_entr

from relentbound.bound import compute_M
from relentbound.bound.curve import check_dim
from relentbound.core import ProbVector, relative_entropy, shannon_entropy

logger = logging.getLogger(__name__)

GAP_TOLERANCE = 1e-9
# Quoted figures for the bound at the largest gap: 0.111 nats for two
# outputs, log sqrt(3) for many.
QUOTED_MAX_GAP_LOW = 0.111
QUOTED_MAX_GAP_LIMIT = 0.5 * math.log(3)


class ConvergenceError(Exception):
    """Raised when an iterative solver hits a caller-supplied iteration
    cap before converging.
    """
    pass


def _to_rows(rows):
    if isinstance(rows, np.ndarray) and rows.ndim != 2:
        raise ValueError('a channel matrix must be two-dimensional')
    rows = tuple(ProbVector(row) for row in rows)
    if not rows:
        raise ValueError('a channel needs at least one input')
    if len({row.dim for row in rows}) != 1:
        raise ValueError('all channel rows must have the same length')
    return rows


@attrs(slots=True, frozen=True)
class Channel:
    """A discrete memoryless channel given by its transition probabilities
    ``T(y|x)``, one :py:class:`relentbound.core.ProbVector` per input.
    Rows are validated to sum to 1 within ``1e-9``.
    """

    rows = attrib(converter=_to_rows)

    @property
    def input_dim(self):
        return len(self.rows)

    @property
    def output_dim(self):
        return self.rows[0].dim

    @property
    def matrix(self):
        """Returns the ``|X| x |Y|`` transition matrix."""
        return np.vstack([row.probs for row in self.rows])

    def row_entropies(self):
        """Returns the entropy of each output distribution."""
        return [shannon_entropy(row) for row in self.rows]


def blahut_arimoto(ch, tol=1e-10, max_iter=None):
    """Returns the capacity of ``ch`` in nats.

    Starts from the uniform input distribution and alternates between output
    and input distributions.  With ``D_x`` the relative entropy of row ``x``
    to the current output distribution, the capacity lies between
    ``log sum_x p_x exp(D_x)`` and ``max_x D_x``; iteration stops when these
    differ by less than ``tol`` and returns the lower one.

    Both estimates converge to the capacity for every finite channel, so by
    default the loop runs until the gap closes, however slowly.  Passing
    ``max_iter`` caps the work and raises :py:class:`ConvergenceError` when
    the cap is hit first.
    """
    if not tol > 0:
        raise ValueError('tolerance must be positive')
    if max_iter is not None and max_iter < 1:
        raise ValueError('iteration cap must be positive')
    matrix = ch.matrix
    p = np.full(ch.input_dim, 1.0 / ch.input_dim)
    steps = itertools.count() if max_iter is None else range(max_iter)
    for iteration in steps:
        q = p @ matrix
        divergences = rel_entr(matrix, q).sum(axis=1)
        weights = p * np.exp(divergences)
        total = weights.sum()
        lower = math.log(total)
        upper = float(divergences.max())
        if upper - lower < tol:
            logger.debug('capacity %r after %d iterations', lower, iteration)
            return max(lower, 0.0)
        p = weights / total
    raise ConvergenceError(
        f'capacity estimate did not converge in {max_iter} iterations '
        f'(gap {upper - lower!r})')


def gap_bound(gap, d):
    """Returns ``G^2 / (2K) - G^3 / (3K^2)`` with ``K = log^2(d-1) + 4``, the
    analytic lower bound associated with an entropy gap ``G`` in dimension
    ``d``.
    """
    k = math.log(d - 1) ** 2 + 4
    return gap ** 2 / (2 * k) - gap ** 3 / (3 * k ** 2)


def entropy_gap_bound(s_max, s_min, d):
    """Returns the capacity lower bound for a channel with ``d`` outputs
    whose row entropies range from ``s_min`` to ``s_max``.
    """
    d = check_dim(d)
    s_max = float(s_max)
    s_min = float(s_min)
    log_d = math.log(d)
    if not (-GAP_TOLERANCE <= s_min <= s_max + GAP_TOLERANCE
            and s_max <= log_d + GAP_TOLERANCE):
        raise ValueError(
            f'need 0 <= s_min <= s_max <= log {d}, got {s_min!r}, {s_max!r}')
    return gap_bound(min(max(s_max - s_min, 0.0), log_d), d)


@attrs(slots=True, frozen=True)
class CapacityBound:
    """A lower bound on a channel's capacity from its row entropies.

    ``conjectural_bound`` is ``M(-(s_max - s_min)/2, |Y|)``, which would be
    a valid (and better) bound if ``M(x, d) >= M(-x, d)`` held for ``x >= 0``;
    that is unproven, so it is reported separately and never relied on.
    """

    bound = attrib()
    s_max = attrib()
    s_min = attrib()
    conjectural_bound = attrib()


def capacity_lower_bound(ch):
    """Computes the :py:class:`CapacityBound` of ``ch``.  The dimension in
    the bound is the output dimension ``|Y|``, which must be at least 2.
    """
    if ch.output_dim < 2:
        raise ValueError('the capacity bound needs at least two outputs')
    entropies = ch.row_entropies()
    s_max = max(entropies)
    s_min = min(entropies)
    return CapacityBound(
        bound=entropy_gap_bound(s_max, s_min, ch.output_dim),
        s_max=s_max,
        s_min=s_min,
        conjectural_bound=compute_M(ch.output_dim,
                                    -(s_max - s_min) / 2).value,
    )


@attrs(slots=True, frozen=True)
class MaxGapBound:
    """The capacity bound at the largest possible gap ``log d``, its
    ``d -> inf`` limit, and the figures quoted for it in the literature.
    """

    d = attrib()
    value = attrib()
    limit = attrib()
    quoted_low = attrib()
    quoted_limit = attrib()


def max_gap_bound(d):
    """Evaluates the capacity bound at ``s_max - s_min = log d``.

    Direct evaluation gives about 0.0531 nats at ``d = 2`` and tends to
    ``1/2`` as ``d`` grows, while the quoted figures are 0.111 and
    ``log sqrt(3)``.  Both are returned and the difference is logged.
    """
    d = check_dim(d)
    value = entropy_gap_bound(math.log(d), 0.0, d)
    result = MaxGapBound(d, value, 0.5, QUOTED_MAX_GAP_LOW,
                         QUOTED_MAX_GAP_LIMIT)
    logger.info('capacity bound at gap log %d: %r (limit %r); quoted '
                'range %r .. %r', d, value, result.limit,
                result.quoted_low, result.quoted_limit)
    return result


@attrs(slots=True, frozen=True)
class MutualInformationCheck:
    """Mutual information ``I(A:B)`` of a joint distribution and the bound
    ``M(-I, d_A d_B)`` it must satisfy.
    """

    mutual_information = attrib()
    m_bound = attrib()


def mutual_information_check(joint):
    """Computes ``I(A:B) = D(p_AB || p_A x p_B)`` for a joint distribution
    given as a ``d_A x d_B`` matrix.

    The entropy difference of the two states is exactly ``-I``, so the
    relative entropy bound yields ``I >= M(-I, d_A d_B)``: it holds for
    every state but carries no information beyond ``I >= 0`` and its
    ``log`` upper bound.
    """
    joint = np.asarray(joint, dtype=float)
    if joint.ndim != 2:
        raise ValueError('a joint distribution must be a matrix')
    p_ab = ProbVector(joint)
    probs = p_ab.probs.reshape(joint.shape)
    product = ProbVector(np.outer(probs.sum(axis=1), probs.sum(axis=0)))
    info = relative_entropy(p_ab, product)
    return MutualInformationCheck(
        mutual_information=info,
        m_bound=compute_M(check_dim(joint.size), -info).value,
    )
