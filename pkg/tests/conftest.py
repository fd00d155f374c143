import pytest

import matcat as mc


@pytest.fixture(scope="session")
def u23():
    return mc.uniform_matroid(2, 3)


@pytest.fixture(scope="session")
def free2():
    return mc.free_matroid(2)


@pytest.fixture(scope="session")
def pair():
    # two parallel elements: a single 2-element circuit
    return mc.make_matroid({1, 2}, [{1, 2}])


@pytest.fixture(scope="session")
def loopy():
    # one ordinary element, and it is a loop
    return mc.make_matroid({1}, [{1}])


@pytest.fixture(scope="session")
def catalog2():
    return mc.catalog(2)


@pytest.fixture(scope="session")
def catalog3():
    return mc.catalog(3)
