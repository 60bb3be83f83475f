import pytest
from sympy import primerange

from fusiondescent.based_ring import construct_T_k
from fusiondescent.cohomology import FiniteAbelianGroup, GModule
from fusiondescent.session import Session, load_config

FERMAT_PRIMES = (3, 5, 17, 257, 65537)


def primes_up_to(n):
    return list(primerange(2, n + 1))


@pytest.fixture
def z2():
    return FiniteAbelianGroup.cyclic(2)


@pytest.fixture
def klein():
    return FiniteAbelianGroup((2, 2))


@pytest.fixture
def trivial_module():
    def build(group, *orders):
        return GModule.trivial(group, orders)
    return build


@pytest.fixture
def t2():
    return construct_T_k(2)


@pytest.fixture
def session(monkeypatch):
    monkeypatch.delenv("FUSIONDESCENT_COHOMOLOGY_CAP", raising=False)
    return Session(load_config())
