import numpy as np
import pytest


@pytest.fixture
def grid():
    """200 seeded points in (0, 1) u (1, 2), kept 0.05 away from integers."""
    rng = np.random.default_rng(20240601)
    out = []
    while len(out) < 200:
        x = rng.uniform(0.0, 2.0)
        if abs(x - round(x)) >= 0.05:
            out.append(float(x))
    return np.array(out)
