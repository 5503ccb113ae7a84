import pytest

from .helpers import cached_builtin


@pytest.fixture(scope="session")
def cp1():
    return cached_builtin("cp1")


@pytest.fixture(scope="session")
def cp2():
    return cached_builtin("cpn", n=2)


@pytest.fixture(scope="session")
def flag3():
    return cached_builtin("paper-flag3")


@pytest.fixture(scope="session")
def quadric():
    return cached_builtin("paper-quadric")


@pytest.fixture(scope="session")
def hessenberg():
    return cached_builtin("paper-hessenberg")
