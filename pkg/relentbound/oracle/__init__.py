"""This module contains independent brute-force checks of the bounds:

- :py:func:`relentbound.oracle.verify_M_bound` and
  :py:func:`relentbound.oracle.verify_variance_bound` -- seeded random-state
  oracles, summarized in an :py:class:`relentbound.oracle.OracleReport`
- :py:func:`relentbound.oracle.check_stationarity` -- optimality residuals
  at the solver's optimum
- :py:func:`relentbound.oracle.conjecture_scan` -- evidence on the sign
  asymmetry of ``M``
"""

from .sampling import sample_simplex, trial_rng
from .report import OracleReport, run_trials
from .verify import (
    match_entropy, run_suite, verify_M_bound, verify_variance_bound,
)
from .stationarity import (
    StationarityResidual, check_stationarity, residual_ok, stationarity_suite,
)
from .conjecture import (
    ConjectureScan, PairAsymmetry, conjecture_scan, pair_asymmetry,
)

__all__ = [
    'sample_simplex', 'trial_rng',
    'OracleReport', 'run_trials',
    'match_entropy', 'run_suite', 'verify_M_bound', 'verify_variance_bound',
    'StationarityResidual', 'check_stationarity', 'residual_ok',
    'stationarity_suite',
    'ConjectureScan', 'PairAsymmetry', 'conjecture_scan', 'pair_asymmetry',
]
