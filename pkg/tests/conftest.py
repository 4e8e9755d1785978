from functools import lru_cache

import pytest

from coxlat import build_system


@lru_cache(maxsize=None)
def system(desc: str):
    return build_system(desc)


@pytest.fixture(scope="session")
def A2():
    return system("A2")


@pytest.fixture(scope="session")
def B2():
    return system("B2")


@pytest.fixture(scope="session")
def A3():
    return system("A3")


@pytest.fixture(scope="session")
def B3():
    return system("B3")


@pytest.fixture(scope="session")
def H3():
    return system("H3")
