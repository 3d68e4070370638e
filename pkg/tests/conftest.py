import math

import pytest

from mapcyl.homotopy_data import FIXTURE_NAMES, fixture


@pytest.fixture(params=FIXTURE_NAMES)
def he(request):
    return fixture(request.param)


@pytest.fixture
def line():
    return fixture("identity-line")


def close(a, b, tol=1e-12):
    return all(math.isclose(u, v, rel_tol=0, abs_tol=tol) for u, v in zip(a, b)) and len(a) == len(b)
