import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import misc


@pytest.fixture
def rng():

    return np.random.default_rng(misc.SEED)


@pytest.fixture
def disk_points():

    return misc.disk_points(100, r_max=0.9, r_min=0.05, seed=misc.SEED)
