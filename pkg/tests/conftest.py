import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hodgepc import fixtures, to_form  # noqa: E402

# base space and local dominance difference of the running five-alternative game
X5_W = np.array([
    [0, 1, 1, 0, 1],
    [1, 0, 1, 0, 1],
    [1, 1, 0, 1, 1],
    [0, 0, 1, 0, 1],
    [1, 1, 1, 1, 0],
])
X5_R = np.array([
    [0, -1, -1, 0, 0],
    [1, 0, 1, 0, 0],
    [1, -1, 0, -1, 1],
    [0, 0, 1, 0, 1],
    [0, 0, -1, -1, 0],
])


@pytest.fixture
def x5():
    return fixtures.x5()


@pytest.fixture
def x5_form():
    return to_form(fixtures.x5())


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
