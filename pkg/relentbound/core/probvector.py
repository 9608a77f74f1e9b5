import operator

import numpy as np

# Entries in [-NEGATIVE_TOLERANCE, 0) are rounding noise and get clamped.
NEGATIVE_TOLERANCE = 1e-12
NORMALIZATION_TOLERANCE = 1e-9


class ProbVector:
    """A class representing a finite probability distribution (the spectrum
    of a state).  Its dimension is the number of entries and can be any
    positive integer.

    Values of this class are immutable once created.  The entries are
    available as a read-only numpy array through ``probs``.

    Can be treated as a sequence of floats, with item ``i`` being the
    probability of the ``i``-th atomic event.
    """

    __slots__ = '_probs',

    def __init__(self, probs):
        """Creates a distribution from a sequence of probabilities.

        Entries slightly below zero (down to ``-1e-12``) are clamped to 0,
        anything more negative is an error.  The entries must sum to 1
        within ``1e-9``; they are then renormalized so that the sum is
        exactly 1 in working precision.
        """
        if isinstance(probs, ProbVector):
            self._probs = probs._probs
            return
        arr = np.array(probs, dtype=float).reshape(-1)
        if arr.size == 0:
            raise ValueError('a distribution needs at least one entry')
        if not np.all(np.isfinite(arr)):
            raise ValueError('probabilities must be finite')
        if np.any(arr < -NEGATIVE_TOLERANCE):
            raise ValueError('probabilities must not be negative')
        arr[arr < 0] = 0.0
        total = arr.sum()
        if abs(total - 1.0) > NORMALIZATION_TOLERANCE:
            raise ValueError(f'probabilities sum to {total!r}, not 1')
        arr /= total
        arr.setflags(write=False)
        self._probs = arr

    @classmethod
    def uniform(cls, dim):
        """Creates the uniform (maximally mixed) distribution."""
        dim = operator.index(dim)
        if dim < 1:
            raise ValueError('dimension must be positive')
        return cls(np.full(dim, 1.0 / dim))

    @classmethod
    def point_mass(cls, dim, index=0):
        """Creates a distribution concentrated on a single event."""
        dim = operator.index(dim)
        index = operator.index(index)
        if dim < 1:
            raise ValueError('dimension must be positive')
        if index not in range(dim):
            raise ValueError('point mass index out of range')
        arr = np.zeros(dim)
        arr[index] = 1.0
        return cls(arr)

    @classmethod
    def two_level(cls, dim, s):
        """Creates ``(1-s, s/(d-1), ..., s/(d-1))``, the family of states
        that attain the tight bounds.  ``s`` must lie in ``[0, 1]``.
        """
        dim = operator.index(dim)
        if dim < 2:
            raise ValueError('two-level states need dimension at least 2')
        s = float(s)
        if not -NEGATIVE_TOLERANCE <= s <= 1 + NEGATIVE_TOLERANCE:
            raise ValueError('s must lie in [0, 1]')
        s = min(max(s, 0.0), 1.0)
        arr = np.full(dim, s / (dim - 1))
        arr[0] = 1.0 - s
        return cls(arr)

    @property
    def probs(self):
        """Returns the probabilities as a read-only numpy array."""
        return self._probs

    @property
    def dim(self):
        """Returns the number of entries."""
        return self._probs.size

    @property
    def support(self):
        """Returns a boolean mask of the entries with nonzero probability."""
        return self._probs > 0

    def is_full_support(self):
        """Returns True if no entry is zero."""
        return bool(np.all(self._probs > 0))

    def mix(self, other, weight):
        """Returns the convex combination ``(1-weight)*self + weight*other``.
        """
        self._check_match(other)
        weight = float(weight)
        if not 0.0 <= weight <= 1.0:
            raise ValueError('mixing weight must lie in [0, 1]')
        return ProbVector((1.0 - weight) * self._probs
                          + weight * other._probs)

    def _check_match(self, other):
        if not isinstance(other, ProbVector):
            raise TypeError('need another ProbVector')
        if self.dim != other.dim:
            raise ValueError('mismatched dimensions in ProbVector operation')

    def __len__(self):
        return self._probs.size

    def __getitem__(self, idx):
        return float(self._probs[operator.index(idx)])

    def __iter__(self):
        return iter(self._probs.tolist())

    def __eq__(self, other):
        """Distributions are equal if they have the same dimension and
        bitwise-equal entries.  Use ``allclose`` for tolerant comparison.
        """
        if not isinstance(other, ProbVector):
            return False
        return (self.dim == other.dim
                and bool(np.array_equal(self._probs, other._probs)))

    def __hash__(self):
        return hash(self._probs.tobytes())

    def allclose(self, other, atol=1e-12):
        """Returns True if all entries agree within ``atol``."""
        self._check_match(other)
        return bool(np.max(np.abs(self._probs - other._probs)) <= atol)

    def __repr__(self):
        items = ', '.join(f'{x:.6g}' for x in self._probs)
        return f'ProbVector([{items}])'
