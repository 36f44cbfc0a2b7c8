import pytest

from torusrep.cyclotomic import PrimeContext
from torusrep.qint import scalars

GRID_PRIMES = (5, 7, 11, 13)


@pytest.fixture(params=GRID_PRIMES, ids=lambda p: f"p{p}")
def ctx(request):
    return PrimeContext(request.param)


@pytest.fixture
def qs(ctx):
    return scalars(ctx)


@pytest.fixture
def ctx5():
    return PrimeContext(5)


@pytest.fixture
def qs5(ctx5):
    return scalars(ctx5)
