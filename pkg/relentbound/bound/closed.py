"""Closed-form lower bounds on ``M(delta, d)``, and the weaker bound
obtained by chaining the Fannes-Audenaert and Pinsker inequalities.
"""

import math

from attr import attrib, attrs

from .curve import check_dim, entropy_curve_inverse
from .mfunc import clamp_delta
from .variance import compute_N

# Slack for callers passing N(d) recomputed in a different way.
N_SLACK = 1e-12
FA_PREFACTOR = (math.e - 1) / math.e


@attrs(slots=True, frozen=True)
class LowerBounds:
    """The chain ``M >= exp_bound >= cubic_bound`` for a given ``n``, and
    the ``n``-free bound ``quad_bound = delta^2 / (3 log^2 d)``.
    """

    exp_bound = attrib()
    cubic_bound = attrib()
    quad_bound = attrib()


def exp_lower_bound(delta, n):
    """Returns ``n (exp(delta/n) - 1 - delta/n)`` without validation."""
    x = delta / n
    return n * (math.expm1(x) - x)


def closed_form_lower_bounds(d, delta, n=None):
    """Returns the :py:class:`LowerBounds` for ``delta``.  ``n`` defaults to
    ``N(d)``; any ``n >= N(d)`` gives valid bounds, so smaller values are
    rejected.  Convenient valid choices are ``n_closed`` and ``log^2 d``.
    """
    d = check_dim(d)
    delta = float(delta)
    n_d = compute_N(d).n_value
    if n is None:
        n = n_d
    n = float(n)
    if n < n_d - N_SLACK:
        raise ValueError(f'n={n!r} is below N({d})={n_d!r}')
    return LowerBounds(
        exp_bound=exp_lower_bound(delta, n),
        cubic_bound=delta ** 2 / (2 * n) + delta ** 3 / (6 * n ** 2),
        quad_bound=delta ** 2 / (3 * math.log(d) ** 2),
    )


def pinsker_fa_bound(d, delta):
    """Returns ``2 T^2`` where ``T`` is the smallest trace distance that the
    Fannes-Audenaert inequality allows for entropy difference ``delta``,
    found by exactly inverting ``h_d(T) = T log(d-1) + H2(T)``.
    """
    d = check_dim(d)
    delta = clamp_delta(d, delta)
    t_lb = entropy_curve_inverse(d, abs(delta))
    return 2 * t_lb ** 2


def pinsker_fa_closed_form(d, delta):
    """Returns the analytic version of :py:func:`pinsker_fa_bound`, with
    ``T`` bounded below by ``(e-1)/e |delta| / (1 + log(d-1) - log|delta|)``.
    """
    d = check_dim(d)
    delta = abs(clamp_delta(d, delta))
    if delta == 0:
        return 0.0
    t_lb = FA_PREFACTOR * delta / (1 + math.log(d - 1) - math.log(delta))
    return 2 * t_lb ** 2
