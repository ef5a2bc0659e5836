import pytest

from agflag.golden import HERMITIAN16
from agflag.kummer import build_curve

C7 = {"field": {"p": 7, "k": 1, "modulus": [0, 1]}, "m": 3, "roots": [0, 1]}


@pytest.fixture(scope="session")
def c7():
    return build_curve(C7)


@pytest.fixture(scope="session")
def herm():
    return build_curve(HERMITIAN16)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
