"""This module computes the tight dimension-dependent bounds:

- :py:func:`relentbound.bound.compute_M` -- the tight lower bound
  ``M(delta, d)`` on ``D(sigma||rho)`` given ``S(sigma) - S(rho) = delta``
- :py:func:`relentbound.bound.compute_N` -- the maximal surprisal variance
  ``N(d)`` and its closed-form bound ``N_d``
- :py:func:`relentbound.bound.closed_form_lower_bounds` -- simple lower
  bounds on ``M`` in terms of ``N``
- :py:func:`relentbound.bound.pinsker_fa_bound` -- the (weaker) bound from
  the Pinsker and Fannes-Audenaert inequalities
"""

from .curve import entropy_curve, entropy_curve_inverse
from .variance import VarianceBound, compute_N, critical_temperature
from .mfunc import BoundResult, Status, compute_M, optimal_pair
from .closed import (
    LowerBounds, closed_form_lower_bounds, pinsker_fa_bound,
    pinsker_fa_closed_form,
)

__all__ = [
    'entropy_curve', 'entropy_curve_inverse',
    'VarianceBound', 'compute_N', 'critical_temperature',
    'BoundResult', 'Status', 'compute_M', 'optimal_pair',
    'LowerBounds', 'closed_form_lower_bounds', 'pinsker_fa_bound',
    'pinsker_fa_closed_form',
]
