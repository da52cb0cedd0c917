import numpy as np
import pytest

from ramplab.annealer import OptimizerConfig
from ramplab.profiles import LuminanceProfile


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240915)


@pytest.fixture(scope="session")
def random_in_gamut_lab():
    """1,000 Lab colors drawn through sRGB, so all are displayable.

    Uses its own generator so the data does not depend on test order.
    """
    from ramplab.colorspace import srgb_to_lab

    own = np.random.default_rng(771177)
    return srgb_to_lab(own.uniform(0.0, 1.0, (1000, 3)))


@pytest.fixture
def linear_profile():
    return LuminanceProfile(kind="linear")


@pytest.fixture
def diverging_profile():
    return LuminanceProfile(kind="diverging")


@pytest.fixture
def fast_config():
    """Small but real annealing schedule for functional tests."""
    return OptimizerConfig(seed=11, t_init=1.0, t_end=0.01, iter_count=300)
