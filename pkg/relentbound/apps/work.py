"""Work extractable from a state at constant temperature."""

import logging
import math

from attr import attrib, attrs

from relentbound.bound import compute_M
from relentbound.bound.curve import check_dim
from relentbound.core import (
    ThermalSystem, free_energy, relative_entropy, shannon_entropy,
    thermal_state,
)

logger = logging.getLogger(__name__)

IDENTITY_TOLERANCE = 1e-9


@attrs(slots=True, frozen=True)
class WorkBound:
    """The maximal work ``exact = T D(rho_i||rho_f)`` extractable from
    ``rho_i`` at temperature ``T`` with Hamiltonian ``H``, where ``rho_f``
    is the thermal state of ``H``, the free energy drop it equals, and the
    lower bound ``T M(-(S(rho_f) - S(rho_i)), d)``.
    """

    exact = attrib()
    lower_bound = attrib()
    free_energy_drop = attrib()
    delta_S = attrib()  # noqa: N815


def extractable_work(rho_i, levels, temperature):
    """Computes the :py:class:`WorkBound` for the state ``rho_i``, energy
    levels ``levels`` and finite ``temperature > 0``.
    """
    system = ThermalSystem(levels, temperature)
    if system.temperature == math.inf:
        raise ValueError('temperature must be finite')
    if system.dim != rho_i.dim:
        raise ValueError('state and Hamiltonian dimensions differ')
    d = check_dim(system.dim)
    rho_f = thermal_state(system)
    t = system.temperature
    exact = t * relative_entropy(rho_i, rho_f)
    drop = (free_energy(rho_i, system.levels, t)
            - free_energy(rho_f, system.levels, t))
    if abs(exact - drop) > IDENTITY_TOLERANCE * max(1.0, abs(exact)):
        logger.warning('free energy drop %r differs from T D = %r',
                       drop, exact)
    delta_s = shannon_entropy(rho_f) - shannon_entropy(rho_i)
    return WorkBound(
        exact=exact,
        lower_bound=t * compute_M(d, -delta_s).value,
        free_energy_drop=drop,
        delta_S=delta_s,
    )
