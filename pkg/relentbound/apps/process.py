"""Stepwise equilibration processes and their irreversibility.

A system is taken from ``rho_i`` to ``rho_f`` through intermediate states
``rho_1, ..., rho_k = rho_f``, each the thermal state of some Hamiltonian at
some temperature, by quenching the Hamiltonian and letting the system
equilibrate.  In entropic units the heat absorbed in step ``j`` is
``dQ_j / T_j = tr (rho_j - rho_{j-1}) (-log rho_j)``, and summing over the
steps gives the identity

    ``sum_j dQ_j / T_j = S(rho_f) - S(rho_i) - sum_j D(rho_{j-1} || rho_j)``

whose last term measures irreversibility.  Physical temperatures only enter
the wasted work ``W_waste >= T_min sum_j D(rho_{j-1} || rho_j)``.
"""

import math
import operator

import numpy as np
from attr import attrib, attrs

from relentbound.bound import compute_M
from relentbound.bound.curve import check_dim
from relentbound.core import (
    ProbVector, relative_entropy, shannon_entropy, trace_distance,
)


@attrs(slots=True, frozen=True)
class ProcessReport:
    """Everything computed for a ``k``-step process along ``path``
    (``path[0]`` is the initial state, ``path[k]`` the final one).

    ``rel_ent_sum`` is bounded below by ``bound_convexity``,
    ``bound_quadratic`` and ``bound_pinsker``, and, for the straight path,
    above by ``upper_envelope``.  ``upper_envelope`` is None for paths with
    several segments.
    """

    k = attrib()
    path = attrib()
    temps = attrib()
    clausius_lhs = attrib()
    delta_S = attrib()  # noqa: N815
    rel_ent_sum = attrib()
    bound_convexity = attrib()
    bound_quadratic = attrib()
    bound_pinsker = attrib()
    upper_envelope = attrib()
    w_waste_lb = attrib()


def _check_steps(k, temps):
    k = operator.index(k)
    if k < 1:
        raise ValueError('a process needs at least one step')
    if temps is None:
        temps = (1.0,) * k
    temps = tuple(float(t) for t in temps)
    if len(temps) != k:
        raise ValueError(f'need {k} step temperatures, got {len(temps)}')
    if not all(t > 0 for t in temps):
        raise ValueError('temperatures must be positive')
    return k, temps


def _check_target(state):
    if not state.is_full_support():
        raise ValueError(
            'intermediate states must have full support for -log rho to '
            'be defined')


def _process_report(path, temps, upper_envelope):
    d = check_dim(path[0].dim)
    k = len(path) - 1
    clausius = 0.0
    rel_ent_sum = 0.0
    for prev, cur in zip(path, path[1:]):
        clausius += float(np.dot(cur.probs - prev.probs, -np.log(cur.probs)))
        rel_ent_sum += relative_entropy(prev, cur)
    delta_s = shannon_entropy(path[-1]) - shannon_entropy(path[0])
    distance = trace_distance(path[0], path[-1])
    return ProcessReport(
        k=k,
        path=tuple(path),
        temps=temps,
        clausius_lhs=clausius,
        delta_S=delta_s,
        rel_ent_sum=rel_ent_sum,
        bound_convexity=k * compute_M(d, -delta_s / k).value,
        bound_quadratic=delta_s ** 2 / (3 * k * math.log(d) ** 2),
        bound_pinsker=(2 * distance) ** 2 / (2 * k),
        upper_envelope=upper_envelope,
        w_waste_lb=min(temps) * rel_ent_sum,
    )


def stepwise_process(rho_i, rho_f, k, temps=None):
    """Runs the ``k``-step process along the straight path
    ``rho_j = (1 - j/k) rho_i + (j/k) rho_f`` and returns its
    :py:class:`ProcessReport`.  ``rho_f`` must have full support; ``temps``
    (one per step) default to 1.
    """
    k, temps = _check_steps(k, temps)
    if rho_i.dim != rho_f.dim:
        raise ValueError('initial and final states differ in dimension')
    _check_target(rho_f)
    path = [rho_i] + [rho_i.mix(rho_f, j / k) for j in range(1, k)]
    path.append(rho_f)
    envelope = (relative_entropy(rho_f, rho_i)
                + relative_entropy(rho_i, rho_f)) / k
    return _process_report(path, temps, envelope)


def stepwise_path(waypoints, k, temps=None):
    """Runs a ``k``-step process along the polygonal path through
    ``waypoints``, with the steps spread uniformly over the path parameter
    (each segment counting as one unit).  All waypoints but the first must
    have full support.  As ``k`` grows the process becomes reversible:
    ``rel_ent_sum`` tends to 0.
    """
    k, temps = _check_steps(k, temps)
    waypoints = [ProbVector(w) for w in waypoints]
    if len(waypoints) < 2:
        raise ValueError('a path needs at least two waypoints')
    if len({w.dim for w in waypoints}) != 1:
        raise ValueError('waypoints differ in dimension')
    for w in waypoints[1:]:
        _check_target(w)
    segments = len(waypoints) - 1
    path = [waypoints[0]]
    for j in range(1, k):
        position = j * segments / k
        idx = min(int(position), segments - 1)
        path.append(waypoints[idx].mix(waypoints[idx + 1], position - idx))
    path.append(waypoints[-1])
    return _process_report(path, temps, None)
