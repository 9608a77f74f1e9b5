"""This module applies the bounds to information theory and thermodynamics:

- :py:mod:`relentbound.apps.channel` -- channel capacity by Blahut-Arimoto
  and its lower bound from row entropies
- :py:mod:`relentbound.apps.coding` -- mismatched-code penalties and
  universal coding exponents
- :py:mod:`relentbound.apps.testing` -- Chernoff information
- :py:mod:`relentbound.apps.process` -- irreversibility of stepwise
  equilibration
- :py:mod:`relentbound.apps.work` -- extractable work at constant
  temperature
"""

from .channel import (
    CapacityBound, Channel, ConvergenceError, MaxGapBound,
    MutualInformationCheck, blahut_arimoto, capacity_lower_bound,
    entropy_gap_bound, max_gap_bound, mutual_information_check,
)
from .coding import CodePenalty, universal_exponent_lb, wrong_code_penalty
from .testing import ChernoffResult, chernoff
from .process import ProcessReport, stepwise_path, stepwise_process
from .work import WorkBound, extractable_work

__all__ = [
    'CapacityBound', 'Channel', 'ConvergenceError', 'MaxGapBound',
    'MutualInformationCheck', 'blahut_arimoto', 'capacity_lower_bound',
    'entropy_gap_bound', 'max_gap_bound', 'mutual_information_check',
    'CodePenalty', 'universal_exponent_lb', 'wrong_code_penalty',
    'ChernoffResult', 'chernoff',
    'ProcessReport', 'stepwise_path', 'stepwise_process',
    'WorkBound', 'extractable_work',
]
