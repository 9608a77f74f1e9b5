"""Oracle reports and the deterministic trial runner."""

import logging
from concurrent.futures import ProcessPoolExecutor

from attr import attrib, attrs
from attr.validators import instance_of

logger = logging.getLogger(__name__)

CHUNK_SIZE = 256


@attrs(slots=True, frozen=True)
class TrialOutcome:
    """The result of a single oracle trial: the slack ``gap`` of the
    inequality under test (``lhs - rhs``), a human-readable description of
    the sample, and the number of times the sample had to be redrawn.
    """

    gap = attrib()
    description = attrib(validator=instance_of(str))
    resampled = attrib(default=0)


@attrs(slots=True, frozen=True)
class OracleReport:
    """Summarizes an oracle run over ``samples`` random trials.

    ``min_gap`` is the smallest slack seen and ``worst_case`` describes the
    trial that produced it.  ``violations`` counts trials with slack below
    ``-tolerance``.  ``witness_gap`` is the largest absolute slack of the
    injected equality cases, which must not exceed ``witness_tolerance``.
    """

    name = attrib(validator=instance_of(str))
    d = attrib()
    samples = attrib()
    min_gap = attrib()
    worst_case = attrib()
    seed = attrib()
    violations = attrib()
    tolerance = attrib()
    resampled = attrib(default=0)
    witness_gap = attrib(default=0.0)
    witness_tolerance = attrib(default=0.0)

    @property
    def passed(self):
        return (self.violations == 0
                and self.witness_gap <= self.witness_tolerance)


def _run_chunk(trial, seed, start, stop):
    return [trial(seed, k) for k in range(start, stop)]


def run_trials(trial, samples, seed, workers=1):
    """Evaluates ``trial(seed, k)`` for ``k`` in ``range(samples)`` and
    returns the outcomes in trial order.

    With ``workers > 1`` the trials are split into chunks evaluated by a
    process pool; ``trial`` must then be picklable (a module-level function
    or a ``functools.partial`` of one).  Outcomes are identical for every
    worker count.
    """
    if samples < 1:
        raise ValueError('need at least one sample')
    if workers < 1:
        raise ValueError('need at least one worker')
    starts = range(0, samples, CHUNK_SIZE)
    stops = [min(start + CHUNK_SIZE, samples) for start in starts]
    if workers == 1:
        chunks = [_run_chunk(trial, seed, start, stop)
                  for start, stop in zip(starts, stops)]
    else:
        n = len(starts)
        with ProcessPoolExecutor(max_workers=workers) as executor:
            chunks = list(executor.map(
                _run_chunk, [trial] * n, [seed] * n, starts, stops))
    return [outcome for chunk in chunks for outcome in chunk]


def summarize(name, d, seed, outcomes, tolerance, witness_gap=0.0,
              witness_tolerance=0.0):
    """Builds an :py:class:`OracleReport` from trial outcomes."""
    worst = min(outcomes, key=lambda outcome: outcome.gap)
    violations = 0
    for outcome in outcomes:
        if outcome.gap < -tolerance:
            violations += 1
            logger.warning('%s d=%d: violation %r at %s',
                           name, d, outcome.gap, outcome.description)
    report = OracleReport(
        name=name,
        d=d,
        samples=len(outcomes),
        min_gap=worst.gap,
        worst_case=worst.description,
        seed=seed,
        violations=violations,
        tolerance=tolerance,
        resampled=sum(outcome.resampled for outcome in outcomes),
        witness_gap=witness_gap,
        witness_tolerance=witness_tolerance,
    )
    logger.info('%s d=%d: %d samples, min gap %r, %d violations, '
                '%d resampled, witness gap %r', name, d, report.samples,
                report.min_gap, violations, report.resampled, witness_gap)
    return report
