import pytest

from qca.lattice import a2, a3, kronecker


@pytest.fixture(scope="session")
def kron():
    return kronecker()


@pytest.fixture(scope="session")
def lat_a2():
    return a2()


@pytest.fixture(scope="session")
def lat_a3():
    return a3()
