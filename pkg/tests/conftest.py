import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from radialhomeo.body import PolyhedralBody, SmoothBody, bessaga_pelczynski_body
from radialhomeo.frame import build_frame
from radialhomeo.maps import MapVariant

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile("default")


@pytest.fixture(scope="session")
def bp_body():
    return bessaga_pelczynski_body()


@pytest.fixture(scope="session")
def bp_frame(bp_body):
    return build_frame(bp_body, [1.0, 0.0, 0.0])


@pytest.fixture(scope="session")
def bowl():
    return SmoothBody("parabolic", 2, {"curvature": 1.0, "depth": 1.0})


@pytest.fixture(scope="session")
def bowl_frame(bowl):
    return build_frame(bowl, [1.0, 0.0])


@pytest.fixture(scope="session")
def box3():
    return PolyhedralBody.box(3)


@pytest.fixture(scope="session")
def slab3():
    return PolyhedralBody.slab(3)


CORRECTED = [MapVariant.bk(), MapVariant.c1(), MapVariant.c2(), MapVariant.dob()]
ALL_VARIANTS = CORRECTED + [MapVariant.bepe()]


@pytest.fixture(params=CORRECTED, ids=lambda v: v.label)
def corrected(request):
    return request.param


@pytest.fixture(params=ALL_VARIANTS, ids=lambda v: v.label)
def variant(request):
    return request.param


def rng(seed=0):
    return np.random.default_rng(seed)


# one line per acceptance criterion, printed after the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[key])
