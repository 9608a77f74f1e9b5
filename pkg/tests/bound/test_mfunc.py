import math

import numpy as np
import pytest

from relentbound.bound import (
    Status, closed_form_lower_bounds, compute_M, compute_N, optimal_pair,
)
from relentbound.core import (
    binary_relative_entropy, relative_entropy, shannon_entropy,
)

GRID_DIMS = (2, 10, 50)


@pytest.fixture(scope='module')
def grids():
    """M on a 401-point grid of [-log d, log d] for each grid dimension."""
    result = {}
    for d in GRID_DIMS:
        deltas = np.linspace(-math.log(d), math.log(d), 401)
        result[d] = (deltas, np.array([compute_M(d, x).value
                                       for x in deltas]))
    return result


class TestEndpoints:
    @pytest.mark.parametrize('d', [2, 3, 5, 10, 50, 1000])
    def test_endpoints(self, d):
        log_d = math.log(d)
        zero = compute_M(d, 0.0)
        assert zero.value == pytest.approx(0.0, abs=1e-10)
        assert zero.s_opt == zero.r_opt == compute_N(d).r_d
        low = compute_M(d, -log_d)
        assert low.value == pytest.approx(log_d, abs=1e-8)
        assert low.finite
        assert (low.s_opt, low.r_opt) == (0.0, (d - 1) / d)
        high = compute_M(d, log_d)
        assert high.status is Status.INFINITE
        assert high.value == math.inf
        assert not high.finite

    def test_clamp(self):
        assert compute_M(3, math.log(3) + 1e-10).status is Status.INFINITE
        assert compute_M(3, -math.log(3) - 1e-10).value == pytest.approx(
            math.log(3))
        with pytest.raises(ValueError):
            compute_M(3, math.log(3) + 1e-3)
        with pytest.raises(ValueError):
            compute_M(3, -math.log(3) - 1e-3)
        with pytest.raises(ValueError):
            compute_M(3, math.nan)
        with pytest.raises(ValueError):
            compute_M(1, 0.0)

    def test_near_lower_endpoint(self):
        # Within rounding of -log d.
        value = compute_M(4, -math.log(4) + 1e-14).value
        assert value == pytest.approx(math.log(4), abs=1e-12)

    @pytest.mark.parametrize('d', [2, 4, 1000])
    def test_near_upper_endpoint(self, d):
        log_d = math.log(d)
        result = compute_M(d, log_d - 5e-13)
        assert result.status is Status.INFINITE
        assert result.delta == log_d
        assert (result.s_opt, result.r_opt) == ((d - 1) / d, 0.0)
        below = compute_M(d, log_d - 1e-6)
        assert below.finite
        assert below.value > compute_M(d, log_d - 1e-3).value

    def test_plain_floats(self):
        result = compute_M(10, 1.0)
        assert type(result.s_opt) is float
        assert type(result.r_opt) is float
        assert type(result.value) is float
        assert type(result.residual) is float


class TestWorkedExample:
    def test_d1000(self):
        result = compute_M(1000, 6)
        assert result.s_opt == pytest.approx(0.9497, abs=5e-4)
        assert result.r_opt == pytest.approx(0.0723, abs=5e-4)
        assert result.value == pytest.approx(2.30, abs=0.01)
        backward = binary_relative_entropy(result.r_opt, result.s_opt)
        assert backward == pytest.approx(2.51, abs=0.01)
        assert result.iterations > 0
        assert result.residual <= 2e-12
        assert result.alternatives == ()


class TestOptimalPair:
    @pytest.mark.parametrize(('d', 'delta'), [
        (2, -0.5), (2, 0.4), (3, -1.0), (5, 1.2), (10, -2.0), (10, 0.01),
        (1000, 6.0),
    ])
    def test_attains(self, d, delta):
        sigma, rho = optimal_pair(d, delta)
        assert sigma.dim == rho.dim == d
        assert shannon_entropy(sigma) - shannon_entropy(rho) == \
            pytest.approx(delta, abs=1e-9)
        assert relative_entropy(sigma, rho) == pytest.approx(
            compute_M(d, delta).value, abs=1e-9)

    def test_infinite(self):
        with pytest.raises(ValueError):
            optimal_pair(4, math.log(4))

    @pytest.mark.parametrize('d', [2, 5, 10, 50])
    def test_tight_on_grid(self, d):
        log_d = math.log(d)
        for delta in np.linspace(-log_d, 0.99 * log_d, 101):
            sigma, rho = optimal_pair(d, delta)
            gap = shannon_entropy(sigma) - shannon_entropy(rho)
            assert gap == pytest.approx(delta, abs=1e-8)
            assert relative_entropy(sigma, rho) == pytest.approx(
                compute_M(d, gap).value, abs=1e-8)


class TestShape:
    def test_bound_chain(self, grids):
        for d in GRID_DIMS:
            deltas, values = grids[d]
            bound = compute_N(d)
            for n in (bound.n_value, bound.n_closed, math.log(d) ** 2):
                for delta, value in zip(deltas, values):
                    closed = closed_form_lower_bounds(d, delta, n)
                    assert value - closed.exp_bound >= -1e-10
                    assert closed.exp_bound - closed.cubic_bound >= -1e-10
                    assert value - closed.quad_bound >= -1e-10

    def test_convex(self, grids):
        for d in GRID_DIMS:
            _, values = grids[d]
            finite = values[:-1]
            second = finite[2:] - 2 * finite[1:-1] + finite[:-2]
            assert second.min() >= -1e-7

    def test_strictly_positive(self, grids):
        for d in GRID_DIMS:
            deltas, values = grids[d]
            nonzero = np.abs(deltas) > 1e-9
            assert np.all(values[nonzero] > 0)
            assert np.all(values[nonzero][:-1] < math.inf)

    @pytest.mark.parametrize('scale', [0.25, 0.5, 0.75])
    def test_subhomogeneous(self, grids, scale):
        for d in GRID_DIMS:
            deltas, values = grids[d]
            for delta, value in zip(deltas[::20], values[::20]):
                if abs(delta) < 1e-9:
                    continue
                assert compute_M(d, scale * delta).value < scale * value

    @pytest.mark.parametrize('delta', [-0.6, -0.2, 0.15, 0.5])
    def test_decreasing_in_dimension(self, delta):
        values = [compute_M(d, delta).value for d in range(2, 13)]
        assert all(a > b for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize('d', [2, 10, 1000])
    def test_quadratic_near_zero(self, d):
        n_value = compute_N(d).n_value
        for delta in (1e-3, -1e-3):
            value = compute_M(d, delta).value
            assert value / (delta ** 2 / (2 * n_value)) == pytest.approx(
                1.0, abs=1e-2)

    def test_asymptotic_two(self):
        deviations = {1: [], -1: []}
        for d in (10 ** 2, 10 ** 4, 10 ** 6):
            n_value = compute_N(d).n_value
            for sign in (1, -1):
                closed = closed_form_lower_bounds(d, sign * math.log(d))
                deviations[sign].append(abs(closed.exp_bound - 2))
            quadratic = math.log(d) ** 2 / (2 * n_value)
            assert quadratic > 1.5
        assert quadratic > 1.9
        for sign in (1, -1):
            values = deviations[sign]
            assert values[0] > values[1] > values[2]

    @pytest.mark.parametrize('d', [10 ** 3, 10 ** 6])
    def test_exp_bound_close_at_large_gap(self, d):
        delta = -0.5 * math.log(d)
        closed = closed_form_lower_bounds(d, delta)
        assert closed.exp_bound / compute_M(d, delta).value >= 0.9
