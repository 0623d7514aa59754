import sys
from pathlib import Path

import pytest

from hypercf.algebra import field_make

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def F2():
    return field_make(2, 1)


@pytest.fixture(scope="session")
def F3():
    return field_make(3, 1)


@pytest.fixture(scope="session")
def F4():
    return field_make(2, 2)


@pytest.fixture(scope="session")
def F5():
    return field_make(5, 1)


@pytest.fixture(scope="session")
def F8():
    return field_make(2, 3)


@pytest.fixture(scope="session")
def F9():
    return field_make(3, 2)
