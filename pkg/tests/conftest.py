import pytest
from hypothesis import settings

from markoff_forge.ff import field

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SMALL_PRIMES = (5, 7, 11, 13, 17, 19, 23, 29, 31)


@pytest.fixture
def f19():
    return field(19)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
