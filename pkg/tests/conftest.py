import pytest

from kleincode.classify import classify


@pytest.fixture(scope="session")
def all_classes():
    """Complete self-dual classifications for n = 1..6."""
    return {n: classify(n, even=False) for n in range(1, 7)}


@pytest.fixture(scope="session")
def even_classes():
    """Even self-dual classifications for n = 2, 4, 6."""
    return {n: classify(n, even=True) for n in (2, 4, 6)}


@pytest.fixture(scope="session")
def even8_classes():
    """The length-8 even classification (the big run)."""
    return classify(8, even=True)
