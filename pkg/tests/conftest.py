import numpy as np
import pytest

from emwavelets import SourceConfig


@pytest.fixture
def cfg():
    """Unit source along z with b = 1.5: the workhorse configuration."""
    return SourceConfig(a=np.array([0.0, 0.0, 1.0]), b=1.5)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
