import sys
from pathlib import Path

import pytest

from krasner.constructions import builtin
from krasner.core import validate

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def K2():
    return validate(builtin("K2"))


@pytest.fixture(scope="session")
def Z4():
    return validate(builtin("Z4"))


@pytest.fixture(scope="session")
def Z6():
    return validate(builtin("Z6"))


@pytest.fixture(scope="session")
def sign():
    return validate(builtin("sign"))


ACCEPTANCE_LINES = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    return request.config.stash.setdefault(ACCEPTANCE_LINES, [])


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
