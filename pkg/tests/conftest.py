import pytest
from hypothesis import settings

from sl21weyl.algebra import PolyAlgebra, TruncAlgebra

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture
def poly():
    return PolyAlgebra()


@pytest.fixture
def t2():
    return TruncAlgebra(2)


@pytest.fixture
def t3():
    return TruncAlgebra(3)
