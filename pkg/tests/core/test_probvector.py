import math

import numpy as np
import pytest

from relentbound.core import ProbVector


class TestProbVector:
    def test_construct(self):
        a = ProbVector([0.25, 0.75])
        assert a.dim == 2
        assert len(a) == 2
        assert a[0] == 0.25
        assert a[1] == 0.75
        assert list(a) == [0.25, 0.75]
        assert isinstance(a.probs, np.ndarray)
        assert a.is_full_support()
        a = ProbVector((1.0,))
        assert a.dim == 1
        assert list(a) == [1.0]
        a = ProbVector(np.array([[0.5, 0.0], [0.25, 0.25]]))
        assert a.dim == 4
        assert list(a.support) == [True, False, True, True]
        assert not a.is_full_support()
        assert ProbVector(a) is not a
        assert ProbVector(a) == a

    def test_clamp(self):
        a = ProbVector([1.0, -1e-13])
        assert a[1] == 0.0
        assert a[0] == 1.0
        a = ProbVector([0.5, 0.5 + 1e-10])
        assert math.isclose(sum(a), 1.0, abs_tol=1e-15)

    def test_invalid(self):
        with pytest.raises(ValueError):
            ProbVector([])
        with pytest.raises(ValueError):
            ProbVector([0.5, 0.6])
        with pytest.raises(ValueError):
            ProbVector([-0.1, 1.1])
        with pytest.raises(ValueError):
            ProbVector([math.nan, 1.0])
        with pytest.raises(ValueError):
            ProbVector([math.inf, 0.0])
        with pytest.raises(TypeError):
            ProbVector(object())

    def test_immutable(self):
        a = ProbVector([0.5, 0.5])
        with pytest.raises(ValueError):
            a.probs[0] = 1.0
        with pytest.raises(AttributeError):
            a.foo = 1

    def test_uniform(self):
        a = ProbVector.uniform(4)
        assert list(a) == [0.25] * 4
        assert ProbVector.uniform(1) == ProbVector([1.0])
        with pytest.raises(ValueError):
            ProbVector.uniform(0)
        with pytest.raises(TypeError):
            ProbVector.uniform(2.0)

    def test_point_mass(self):
        assert list(ProbVector.point_mass(3)) == [1.0, 0.0, 0.0]
        assert list(ProbVector.point_mass(3, 2)) == [0.0, 0.0, 1.0]
        with pytest.raises(ValueError):
            ProbVector.point_mass(3, 3)
        with pytest.raises(ValueError):
            ProbVector.point_mass(0)

    def test_two_level(self):
        a = ProbVector.two_level(4, 0.3)
        assert a.allclose(ProbVector([0.7, 0.1, 0.1, 0.1]))
        assert ProbVector.two_level(3, 0.0) == ProbVector.point_mass(3)
        assert ProbVector.two_level(2, 0.5) == ProbVector.uniform(2)
        assert ProbVector.two_level(5, 0.8).allclose(ProbVector.uniform(5))
        with pytest.raises(ValueError):
            ProbVector.two_level(1, 0.0)
        with pytest.raises(ValueError):
            ProbVector.two_level(3, 1.5)

    def test_mix(self):
        a = ProbVector.point_mass(2)
        b = ProbVector.point_mass(2, 1)
        assert a.mix(b, 0.0) == a
        assert a.mix(b, 1.0) == b
        assert a.mix(b, 0.25) == ProbVector([0.75, 0.25])
        with pytest.raises(ValueError):
            a.mix(b, 1.5)
        with pytest.raises(ValueError):
            a.mix(ProbVector.uniform(3), 0.5)
        with pytest.raises(TypeError):
            a.mix([0.5, 0.5], 0.5)

    def test_eq_hash(self):
        a = ProbVector([0.25, 0.75])
        b = ProbVector([0.25, 0.75])
        c = ProbVector([0.75, 0.25])
        assert a == b
        assert hash(a) == hash(b)
        assert a != c
        assert a != [0.25, 0.75]
        assert a != ProbVector([0.25, 0.75, 0.0])
        assert len({a, b, c}) == 2
        assert a.allclose(ProbVector([0.25 + 1e-13, 0.75 - 1e-13]))
        assert not a.allclose(c)

    def test_repr(self):
        assert repr(ProbVector([0.25, 0.75])) == 'ProbVector([0.25, 0.75])'
