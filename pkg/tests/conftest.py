import pytest

from poishom.catalog import get_entry


def _structure(entry_id):
    return get_entry(entry_id).document.to_structure()


@pytest.fixture(scope="session")
def trivial2():
    return _structure("trivial-2")


@pytest.fixture(scope="session")
def symplectic():
    return _structure("symplectic-plane")


@pytest.fixture(scope="session")
def so3():
    return _structure("so3")


@pytest.fixture(scope="session")
def potential():
    return _structure("potential-x2z")


@pytest.fixture(scope="session")
def log2():
    return _structure("log-canonical-2")


@pytest.fixture(scope="session")
def log3():
    return _structure("log-canonical-3")


@pytest.fixture(scope="session")
def log3u():
    return _structure("log-canonical-3u")
