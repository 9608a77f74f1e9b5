"""This module contains the entropic primitives everything else is built on:

- :py:class:`relentbound.core.ProbVector` -- an immutable finite probability
  distribution, the representation of every state
- :py:class:`relentbound.core.ThermalSystem` -- energy levels at a
  temperature, generating thermal states
- entropy, relative entropy, their binary versions, surprisal variance and
  trace distance, all in nats

States are probability vectors rather than density matrices: the optimal
states of every bound in this package commute, and all quantities depend
only on spectra.
"""

from .probvector import ProbVector
from .entropy import (
    binary_entropy, binary_relative_entropy, relative_entropy,
    shannon_entropy, surprisal_variance, trace_distance,
)
from .thermal import (
    ThermalSystem, energy, free_energy, heat_capacity, thermal_state,
)

__all__ = [
    'ProbVector', 'ThermalSystem',
    'shannon_entropy', 'relative_entropy', 'binary_entropy',
    'binary_relative_entropy', 'surprisal_variance', 'trace_distance',
    'thermal_state', 'energy', 'heat_capacity', 'free_energy',
]
