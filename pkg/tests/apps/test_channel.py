import math

import numpy as np
import pytest

from relentbound.apps import (
    Channel, ConvergenceError, blahut_arimoto, capacity_lower_bound,
    entropy_gap_bound, max_gap_bound, mutual_information_check,
)
from relentbound.bound import compute_M
from relentbound.core import binary_entropy
from relentbound.oracle import sample_simplex


class TestChannel:
    def test_dims(self):
        ch = Channel([[0.5, 0.5, 0.0], [0.1, 0.2, 0.7]])
        assert ch.input_dim == 2
        assert ch.output_dim == 3
        assert ch.matrix.shape == (2, 3)
        assert ch.row_entropies()[0] == pytest.approx(math.log(2))

    def test_numpy(self):
        ch = Channel(np.eye(3))
        assert ch.input_dim == ch.output_dim == 3

    def test_invalid(self):
        with pytest.raises(ValueError):
            Channel([])
        with pytest.raises(ValueError):
            Channel([[1.0], [0.5, 0.5]])
        with pytest.raises(ValueError):
            Channel([[0.5, 0.6]])
        with pytest.raises(ValueError):
            Channel(np.ones(3) / 3)


class TestBlahutArimoto:
    @pytest.mark.parametrize('d', [2, 3, 8])
    def test_identity(self, d):
        assert blahut_arimoto(Channel(np.eye(d))) == pytest.approx(
            math.log(d), abs=1e-9)

    def test_useless(self):
        ch = Channel([[0.2, 0.8]] * 3)
        assert blahut_arimoto(ch) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize('f', [0.01, 0.1, 0.3, 0.5])
    def test_binary_symmetric(self, f):
        ch = Channel([[1 - f, f], [f, 1 - f]])
        assert blahut_arimoto(ch) == pytest.approx(
            math.log(2) - binary_entropy(f), abs=1e-9)

    def test_z_channel(self):
        ch = Channel([[1.0, 0.0], [0.5, 0.5]])
        assert blahut_arimoto(ch) == pytest.approx(math.log(1.25), abs=1e-9)

    def test_no_convergence(self):
        ch = Channel([[1.0, 0.0], [0.5, 0.5]])
        with pytest.raises(ConvergenceError):
            blahut_arimoto(ch, max_iter=1)
        with pytest.raises(ValueError):
            blahut_arimoto(ch, max_iter=0)

    def test_slow_convergence(self):
        # The gap here is still above 1e-10 after 100000 iterations.
        ch = Channel(sample_simplex(4, 5, 129))
        capacity = blahut_arimoto(ch)
        assert 0 < capacity <= math.log(4)
        assert capacity_lower_bound(ch).bound <= capacity + 1e-9
        with pytest.raises(ConvergenceError):
            blahut_arimoto(ch, max_iter=100)

    def test_bad_tolerance(self):
        with pytest.raises(ValueError):
            blahut_arimoto(Channel(np.eye(2)), tol=0.0)


class TestCapacityBound:
    @pytest.mark.parametrize('inputs', range(1, 9))
    def test_random_channels(self, inputs):
        for outputs in range(2, 9):
            rows = sample_simplex(outputs, inputs, 100 * inputs + outputs)
            ch = Channel(rows)
            result = capacity_lower_bound(ch)
            assert 0 <= result.bound <= blahut_arimoto(ch) + 1e-9
            assert result.bound <= math.log(2)
            assert result.s_min <= result.s_max

    def test_permuted_rows(self):
        ch = Channel([[0.7, 0.2, 0.1], [0.1, 0.7, 0.2], [0.2, 0.1, 0.7]])
        result = capacity_lower_bound(ch)
        assert result.bound == pytest.approx(0.0, abs=1e-12)
        assert result.conjectural_bound == pytest.approx(0.0, abs=1e-12)

    def test_conjectural(self):
        ch = Channel(np.eye(4)[:2].tolist() + [[0.25] * 4])
        result = capacity_lower_bound(ch)
        assert result.s_max - result.s_min == pytest.approx(math.log(4))
        assert result.conjectural_bound == pytest.approx(
            compute_M(4, -math.log(4) / 2).value)

    def test_single_output(self):
        with pytest.raises(ValueError):
            capacity_lower_bound(Channel([[1.0], [1.0]]))


class TestGapBound:
    def test_values(self):
        k = math.log(9) ** 2 + 4
        assert entropy_gap_bound(2.0, 0.5, 10) == pytest.approx(
            1.5 ** 2 / (2 * k) - 1.5 ** 3 / (3 * k ** 2))
        assert entropy_gap_bound(1.0, 1.0, 10) == 0.0

    def test_monotone(self):
        values = [entropy_gap_bound(gap, 0.0, 5)
                  for gap in np.linspace(0, math.log(5), 50)]
        assert values == sorted(values)

    def test_invalid(self):
        with pytest.raises(ValueError):
            entropy_gap_bound(0.5, 1.0, 5)
        with pytest.raises(ValueError):
            entropy_gap_bound(math.log(5) + 0.1, 0.0, 5)
        with pytest.raises(ValueError):
            entropy_gap_bound(0.5, -0.1, 5)
        with pytest.raises(ValueError):
            entropy_gap_bound(0.5, 0.0, 1)

    def test_max_gap(self):
        result = max_gap_bound(2)
        assert result.value == pytest.approx(0.0531, abs=1e-4)
        assert result.limit == 0.5
        assert result.quoted_low == 0.111
        assert result.quoted_limit == pytest.approx(math.log(math.sqrt(3)))

    def test_max_gap_large(self):
        assert 0.45 < max_gap_bound(10 ** 6).value < 0.5


class TestMutualInformation:
    def test_product(self):
        check = mutual_information_check([[0.1, 0.3], [0.15, 0.45]])
        assert check.mutual_information == pytest.approx(0.0, abs=1e-12)
        assert check.m_bound == pytest.approx(0.0, abs=1e-9)

    def test_correlated(self):
        check = mutual_information_check([[0.5, 0.0], [0.0, 0.5]])
        assert check.mutual_information == pytest.approx(math.log(2))
        assert check.m_bound <= check.mutual_information + 1e-9

    def test_random(self):
        for sample in sample_simplex(6, 20, 3):
            joint = sample.probs.reshape(2, 3)
            check = mutual_information_check(joint)
            assert check.m_bound <= check.mutual_information + 1e-7

    def test_invalid(self):
        with pytest.raises(ValueError):
            mutual_information_check([0.5, 0.5])
