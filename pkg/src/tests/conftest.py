import numpy as np
import pytest

from semigrass.gf import field_of_order
from semigrass.utils import make_rng


@pytest.fixture(scope="session")
def f2():
    return field_of_order(2)


@pytest.fixture(scope="session")
def f3():
    return field_of_order(3)


@pytest.fixture(scope="session")
def f4():
    return field_of_order(4)


@pytest.fixture(scope="session")
def f5():
    return field_of_order(5)


@pytest.fixture(params=[2, 3, 4, 5], ids=lambda q: f"F_{q}")
def any_field(request):
    return field_of_order(request.param)


@pytest.fixture
def rng() -> np.random.Generator:
    return make_rng(1234)
