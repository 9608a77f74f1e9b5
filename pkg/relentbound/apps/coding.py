"""Bounds for source coding with a mismatched code."""

import math

from attr import attrib, attrs

from relentbound.bound import compute_M
from relentbound.bound.curve import check_dim
from relentbound.core import relative_entropy, shannon_entropy

RATE_TOLERANCE = 1e-9


@attrs(slots=True, frozen=True)
class CodePenalty:
    """The expected excess code length ``penalty = D(p||q) / log D`` of a
    code built for ``q`` used on a source ``p``, in code letters, and its
    lower bounds in terms of the expected savings ``delta``.
    ``quadratic_bound`` is None when ``delta < 0``: the quadratic form only
    bounds the penalty of codes promising positive savings.
    """

    penalty = attrib()
    delta = attrib()
    lower_bound = attrib()
    quadratic_bound = attrib()


def wrong_code_penalty(p, q, alphabet=math.e):
    """Computes the :py:class:`CodePenalty` of coding ``p`` with a code
    optimal for ``q`` over an alphabet of size ``alphabet``.

    ``alphabet`` can be any real number above 1; ``math.e`` gives natural
    units.  With ``delta = (S(p) - S(q)) / log D`` the penalty is at least
    ``M(delta log D, d) / log D``, and for ``delta >= 0`` at least
    ``2 delta^2 log D / (log^2(d-1) + 4)``.
    """
    alphabet = float(alphabet)
    if not alphabet > 1:
        raise ValueError('the code alphabet size must exceed 1')
    d = check_dim(p.dim)
    log_a = math.log(alphabet)
    penalty = relative_entropy(p, q) / log_a
    delta_nats = shannon_entropy(p) - shannon_entropy(q)
    delta = delta_nats / log_a
    quadratic = None
    if delta >= 0:
        quadratic = 2 * delta ** 2 * log_a / (math.log(d - 1) ** 2 + 4)
    return CodePenalty(
        penalty=penalty,
        delta=delta,
        lower_bound=compute_M(d, delta_nats).value / log_a,
        quadratic_bound=quadratic,
    )


def universal_exponent_lb(rate, p):
    """Returns ``M(rate - S(p), d)``, a lower bound on the exponent
    ``inf { D(sigma||p) : S(sigma) > rate }`` with which a universal code of
    rate ``rate`` fails on the source ``p``.  Requires
    ``S(p) < rate <= log d``.
    """
    d = check_dim(p.dim)
    rate = float(rate)
    entropy = shannon_entropy(p)
    if not rate > entropy:
        raise ValueError(
            f'rate {rate!r} must exceed the source entropy {entropy!r}')
    if rate > math.log(d) + RATE_TOLERANCE:
        raise ValueError(f'rate {rate!r} exceeds log {d}')
    return compute_M(d, min(rate, math.log(d)) - entropy).value
