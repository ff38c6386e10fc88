import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from orthoposet import benzene, crown, enumerate_orthoposets, nonlattice12, power_set


@pytest.fixture(scope="session")
def benzene_model():
    return benzene()


@pytest.fixture(scope="session")
def crown4():
    return crown(4)


@pytest.fixture(scope="session")
def p3():
    return power_set(3)


@pytest.fixture(scope="session")
def twelve():
    return nonlattice12()


@pytest.fixture(scope="session")
def small_fleet():
    """Fixtures plus every isomorphism class up to 8 elements."""
    models = [crown(n) for n in range(5)] + [benzene(), power_set(2), power_set(3)]
    models += list(enumerate_orthoposets(8))
    return models
