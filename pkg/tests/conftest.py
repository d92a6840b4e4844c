import pytest

from helpers import FIXTURES, algebra


@pytest.fixture(params=FIXTURES)
def fixture_alg(request):
    return algebra(request.param)
