import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from photon_bivector.momentum import FourMomentum

settings.register_profile(
    "repo", derandomize=True, deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("repo")


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def reference_momentum():
    return FourMomentum(3.0, 2.0, 2.0, 1.0)
