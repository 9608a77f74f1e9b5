"""The maximal surprisal variance ``N(d)`` and its closed-form bound."""

import logging
import math
import threading

from attr import attrib, attrs
from scipy.optimize import bisect

from .curve import check_dim

logger = logging.getLogger(__name__)

ROOT_TOLERANCE = 1e-15


@attrs(slots=True, frozen=True)
class VarianceBound:
    """The maximum ``n_value`` of ``r(1-r) log^2((1-r)/r (d-1))`` over
    ``0 < r < 1/2``, the maximizer ``r_d``, and the closed-form upper bound
    ``n_closed = log^2(d-1)/4 + 1``.
    """

    d = attrib()
    n_value = attrib()
    r_d = attrib()
    n_closed = attrib()

    @property
    def root_residual(self):
        """Residual of the stationarity equation at ``r_d``."""
        return _stationarity(self.d, self.r_d)


def _stationarity(d, r):
    return (1 - 2 * r) * math.log((1 - r) / r * (d - 1)) - 2


def variance_objective(d, r):
    """Returns ``r(1-r) log^2((1-r)/r (d-1))``, the two-level surprisal
    variance.
    """
    return r * (1 - r) * math.log((1 - r) / r * (d - 1)) ** 2


def _solve(d):
    # The stationarity function is +inf at r -> 0 and -2 at r = 1/2.
    r_d, info = bisect(lambda r: _stationarity(d, r), 1e-300, 0.5,
                       xtol=ROOT_TOLERANCE, full_output=True)
    logger.debug('N(%d): r_d=%r after %d halvings', d, r_d, info.iterations)
    return VarianceBound(
        d=d,
        n_value=variance_objective(d, r_d),
        r_d=r_d,
        n_closed=0.25 * math.log(d - 1) ** 2 + 1,
    )


_cache = {}
_cache_lock = threading.Lock()


def compute_N(d):  # noqa: N802
    """Returns the :py:class:`VarianceBound` for dimension ``d >= 2``.
    Results are cached per dimension.
    """
    d = check_dim(d)
    with _cache_lock:
        result = _cache.get(d)
        if result is None:
            result = _cache[d] = _solve(d)
    return result


def critical_temperature(d):
    """Returns the temperature at which levels ``(-1, 0, ..., 0)`` have the
    maximal heat capacity ``N(d)``: there, the thermal state is
    ``(1-r_d, r_d/(d-1), ...)``.
    """
    r_d = compute_N(d).r_d
    return 1.0 / math.log((1 - r_d) / r_d * (d - 1))
