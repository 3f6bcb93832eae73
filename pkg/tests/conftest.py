import pytest
from hypothesis import HealthCheck, settings

from redinit import Ring, gin

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def R3():
    return Ring(("x", "y", "z"))


@pytest.fixture
def three_quadrics(R3):
    return [R3.parse(s) for s in ("x^2 + y*z", "x*y", "x*z")]


@pytest.fixture(autouse=True)
def _fresh_gin_cache():
    yield
    gin.clear_cache()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
