import pytest
from hypothesis import HealthCheck, settings

from rtgw.catalog.so3 import so3_datum
from rtgw.catalog.su3 import su3_datum

settings.register_profile("exact", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("exact")


@pytest.fixture(scope="session")
def su3():
    return su3_datum()


@pytest.fixture(scope="session")
def so3():
    return so3_datum()


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE

    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
