from fractions import Fraction

import numpy as np
import pytest

from constructions.sampling import sample_points
from constructions.seven_adic import self_similar_e0
from spaces.metric_spaces import EuclideanSpace


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def line():
    return EuclideanSpace(1)


@pytest.fixture(scope="session")
def e0_points():
    """Endpoints of the depth-6 stage of the base-7 {1, 4} digit set, exact."""
    return sample_points(self_similar_e0(6))


@pytest.fixture
def seven_schedule():
    return [Fraction(1, 7 ** k) for k in range(1, 7)]


def dyadic_points(rng, n, denominator=1024):
    return [Fraction(int(k), denominator) for k in rng.integers(0, denominator + 1, size=n)]
