import pytest

import support


@pytest.fixture(scope="session")
def suite500():
    """500 seeded random distributions, N in 2..5, cardinalities in {2, 3}."""
    return support.random_suite(500)


@pytest.fixture(scope="session")
def suite50(suite500):
    return suite500[:50]
