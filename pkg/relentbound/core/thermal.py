import math

import numpy as np
from attr import attrib, attrs

from .entropy import shannon_entropy, surprisal_variance
from .probvector import ProbVector


def _to_levels(levels):
    levels = tuple(float(x) for x in levels)
    if not levels:
        raise ValueError('a system needs at least one energy level')
    if not all(math.isfinite(x) for x in levels):
        raise ValueError('energy levels must be finite')
    return levels


@attrs(slots=True, frozen=True)
class ThermalSystem:
    """Represents a finite system with given energy levels (the diagonal of
    its Hamiltonian) at a given temperature, in units where Boltzmann's
    constant is 1.  The temperature may be ``math.inf``.
    """

    levels = attrib(converter=_to_levels)
    temperature = attrib(converter=float)

    @temperature.validator
    def _validate_temperature(self, attribute, value):
        if not value > 0:
            raise ValueError('temperature must be positive')

    @property
    def dim(self):
        return len(self.levels)

    def at(self, temperature):
        """Returns the same system at another temperature."""
        return ThermalSystem(self.levels, temperature)


def thermal_state(system):
    """Returns the Gibbs state ``exp(-H/T) / tr exp(-H/T)``.  At infinite
    temperature this is the uniform distribution.
    """
    levels = np.array(system.levels)
    if system.temperature == math.inf:
        return ProbVector.uniform(system.dim)
    # Shifting by the lowest level keeps every exponent <= 0.
    weights = np.exp(-(levels - levels.min()) / system.temperature)
    return ProbVector(weights / weights.sum())


def energy(system):
    """Returns the mean energy ``E(T)`` of the thermal state."""
    return float(np.dot(system.levels, thermal_state(system).probs))


def heat_capacity(system):
    """Returns ``C(T) = dE/dT``, which equals the surprisal variance of the
    thermal state.
    """
    if system.dim == 1:
        return 0.0
    return surprisal_variance(thermal_state(system))


def free_energy(p, levels, temperature):
    """Returns ``F = tr(H p) - T S(p)`` for a (not necessarily thermal)
    state ``p``.
    """
    levels = _to_levels(levels)
    if len(levels) != p.dim:
        raise ValueError('state and Hamiltonian dimensions differ')
    temperature = float(temperature)
    if not 0 < temperature < math.inf:
        raise ValueError('temperature must be positive and finite')
    return float(np.dot(levels, p.probs)) - temperature * shannon_entropy(p)
