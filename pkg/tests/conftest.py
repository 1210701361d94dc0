import pytest

import casimir as cs


@pytest.fixture(scope="session")
def gold():
    """Gold with constant nu = 35 meV, the default setup everywhere."""
    return cs.gold_drude()


@pytest.fixture(scope="session")
def gold_bg():
    """Gold with the Bloch-Grueneisen relaxation model."""
    return cs.gold_drude("bg")
