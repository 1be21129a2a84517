import pytest

from admperm.rootdata import get_root_datum


@pytest.fixture(scope="session")
def e6():
    return get_root_datum("E6")


@pytest.fixture(scope="session")
def e7():
    return get_root_datum("E7")


E6_W1 = (2, 4, 5, 6, 3, 4, 5, 2, 4, 3, 1)
E6_W2 = (4, 5, 6, 2, 4, 5)
E7_W1 = (2, 4, 5, 3, 4, 1, 3, 2, 4, 5, 6, 7)
E7_W2 = (4, 3, 2, 4, 1, 3)
