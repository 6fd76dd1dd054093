import os

import pytest
from hypothesis import settings

# keep test runs away from the user's cache directory
os.environ.setdefault("INTPOSETS_CACHE", "")

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def poset_tables():
    from intposets.checks import tables

    return tables


# filled by test_acceptance, printed after the run
CRITERION_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERION_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERION_LINES):
        terminalreporter.write_line(CRITERION_LINES[number])
