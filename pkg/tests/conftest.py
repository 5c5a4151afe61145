import numpy as np
import pytest

from cliffordba import clifford_curve, clifford_provider, integrate_surface, pole_divisor


@pytest.fixture(scope="session")
def curve():
    return clifford_curve()


@pytest.fixture(scope="session")
def poles(curve):
    return pole_divisor(curve.u)


@pytest.fixture(scope="session")
def provider():
    return clifford_provider()


@pytest.fixture(scope="session")
def grid64(curve):
    """One 64x64 reconstruction shared by the surface and acceptance tests."""
    return integrate_surface(curve, 64, 64)


@pytest.fixture()
def rng():
    return np.random.default_rng(1729)
