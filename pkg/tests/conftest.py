import pytest

from airframe.systems import (airplane, airplane_generators,
                              basilica, basilica_generators)


@pytest.fixture(scope="session")
def A():
    return airplane()


@pytest.fixture(scope="session")
def gens(A):
    return airplane_generators(A)


@pytest.fixture(scope="session")
def B():
    return basilica()


@pytest.fixture(scope="session")
def bgens(B):
    return basilica_generators(B)
