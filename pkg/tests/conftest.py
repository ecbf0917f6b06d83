import random
from pathlib import Path

import pytest

from reachdet.recurrence import FACTORIAL, FIBONACCI, HALF, MERSENNE, PERIOD6

ROOT = Path(__file__).resolve().parent.parent
SPECS = ROOT / "specs"


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def fib():
    return FIBONACCI


@pytest.fixture
def period6():
    return PERIOD6


@pytest.fixture
def mersenne():
    return MERSENNE


@pytest.fixture
def factorial():
    return FACTORIAL


@pytest.fixture
def half():
    return HALF


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
