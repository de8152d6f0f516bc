import numpy as np
import pytest

from delrips import PointCloud


def random_cloud(rng, n, dim=2, width=1.0):
    return PointCloud.from_points(rng.uniform(-width, width, (n, dim)))


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
