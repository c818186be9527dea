import numpy as np
import pytest

from fastfib.tables import build_tables


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run full-scale tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return

    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def tables():
    return build_tables(8)


@pytest.fixture
def random_state():
    return np.random.RandomState(2009)
