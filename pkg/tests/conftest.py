import pytest

from posicat import Engine


@pytest.fixture(scope="session")
def engine():
    """Shared engine so exhaustive sweeps reuse the memo tables."""
    return Engine()
