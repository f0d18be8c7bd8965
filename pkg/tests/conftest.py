import pytest
from hypothesis import HealthCheck, settings

from latticebb import hnf

settings.register_profile(
    "ci",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run slow sweeps"
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def ex22():
    """Planar lattice with pivots 2 and 10; three maximal ideals of 20 points."""
    return hnf([(2, 6), (0, 10)])


@pytest.fixture
def ex312():
    """Rank-2 lattice in Z^3 with six maximal ideals, all max-compatible."""
    return hnf([(2, 1, 4), (0, 3, -3)])


@pytest.fixture
def z3x():
    """Full-rank Z^3 lattice with 35 max-compatible ideals, two not realizable."""
    return hnf([(1, -2, -1), (1, -1, 2), (-2, -1, 1)])


@pytest.fixture
def rank3():
    """Full-rank Z^3 lattice whose maximal ideals are not all of maximum size."""
    return hnf([(1, 1, 2), (0, 3, 1), (0, 0, 4)])
