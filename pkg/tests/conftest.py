import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

unit = st.floats(-1, 1, allow_nan=False, allow_infinity=False)
vec3 = arrays(np.float64, 3, elements=unit)
mat3 = arrays(np.float64, (3, 3), elements=unit)
seeds = st.integers(0, 2**32 - 1)


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


def bell_projector():
    psi = np.array([0, 1, -1, 0]) / np.sqrt(2)
    return np.outer(psi, psi).astype(complex)
