import numpy as np
import pytest
from hypothesis import HealthCheck, settings

# property tests do real numerics; wall-clock deadlines just add flake
settings.register_profile(
    "rtdiff",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    max_examples=60,
)
settings.load_profile("rtdiff")


def midpoint_quad(fn, panels=1 << 14):
    """Midpoint-rule integral of fn over [0, 1); the independent oracle."""
    xs = (np.arange(panels) + 0.5) / panels
    return float(np.mean(fn(xs)))


@pytest.fixture
def quad():
    return midpoint_quad
