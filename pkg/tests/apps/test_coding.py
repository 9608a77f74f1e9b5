import itertools
import math

import numpy as np
import pytest
from hypothesis import given

from relentbound.apps import universal_exponent_lb, wrong_code_penalty
from relentbound.bound import compute_M, optimal_pair
from relentbound.core import ProbVector, relative_entropy, shannon_entropy

from tests.strategies import prob_vectors


class TestWrongCodePenalty:
    def test_matched_code(self):
        p = ProbVector([0.5, 0.25, 0.25])
        result = wrong_code_penalty(p, p)
        assert result.penalty == 0.0
        assert result.delta == 0.0
        assert result.lower_bound == 0.0
        assert result.quadratic_bound == 0.0

    def test_tight_pair(self):
        p, q = optimal_pair(1000, 6.0)
        result = wrong_code_penalty(p, q)
        assert result.delta == pytest.approx(6.0, abs=1e-9)
        assert result.lower_bound == pytest.approx(2.30, abs=0.01)
        assert result.penalty == pytest.approx(result.lower_bound, abs=1e-8)
        assert result.quadratic_bound < result.lower_bound

    def test_binary_alphabet(self):
        p = ProbVector([0.7, 0.2, 0.1])
        q = ProbVector([0.2, 0.3, 0.5])
        nats = wrong_code_penalty(p, q)
        bits = wrong_code_penalty(p, q, alphabet=2)
        assert bits.penalty == pytest.approx(nats.penalty / math.log(2))
        assert bits.delta == pytest.approx(nats.delta / math.log(2))
        assert bits.lower_bound == pytest.approx(
            nats.lower_bound / math.log(2))

    def test_negative_savings(self):
        p = ProbVector([0.9, 0.05, 0.05])
        q = ProbVector.uniform(3)
        result = wrong_code_penalty(p, q)
        assert result.delta < 0
        assert result.quadratic_bound is None

    @given(prob_vectors(dim=4), prob_vectors(dim=4))
    def test_bounds_hold(self, p, q):
        result = wrong_code_penalty(p, q)
        assert result.penalty >= result.lower_bound - 1e-7
        if result.quadratic_bound is not None:
            assert result.penalty >= result.quadratic_bound - 1e-9

    def test_invalid(self):
        p = ProbVector([0.5, 0.5])
        with pytest.raises(ValueError):
            wrong_code_penalty(p, p, alphabet=1)
        with pytest.raises(ValueError):
            wrong_code_penalty(ProbVector([1.0]), ProbVector([1.0]))


class TestUniversalExponent:
    def test_close_rate(self):
        p = ProbVector([0.5, 0.3, 0.2])
        value = universal_exponent_lb(shannon_entropy(p) + 1e-6, p)
        assert 0 <= value < 1e-10

    def test_point_mass(self):
        assert universal_exponent_lb(math.log(3),
                                     ProbVector.point_mass(3)) == math.inf

    def test_value(self):
        p = ProbVector([0.6, 0.3, 0.1])
        rate = 1.0
        assert universal_exponent_lb(rate, p) == compute_M(
            3, rate - shannon_entropy(p)).value

    def test_brute_force(self):
        # The bound stays below the exponent over a grid of states above
        # the rate.
        p = ProbVector([0.7, 0.2, 0.1])
        rate = 0.95
        bound = universal_exponent_lb(rate, p)
        steps = np.arange(0.0, 1.0 + 1e-9, 0.005)
        best = math.inf
        for a, b in itertools.product(steps, steps):
            if a + b > 1:
                continue
            sigma = ProbVector([a, b, max(1 - a - b, 0.0)])
            if shannon_entropy(sigma) > rate:
                best = min(best, relative_entropy(sigma, p))
        assert bound <= best + 1e-9
        assert bound > 0

    def test_invalid(self):
        p = ProbVector([0.5, 0.3, 0.2])
        with pytest.raises(ValueError):
            universal_exponent_lb(shannon_entropy(p), p)
        with pytest.raises(ValueError):
            universal_exponent_lb(math.log(3) + 0.01, p)
