from pathlib import Path

import pytest

from adftrans.io import parse_file

GOLDEN = Path(__file__).parent / "golden"


def golden_path(name: str) -> Path:
    return GOLDEN / name


@pytest.fixture
def ex1():
    return parse_file(str(GOLDEN / "example1.setaf"), "setaf").body


@pytest.fixture
def ex2():
    return parse_file(str(GOLDEN / "example2.eafc"), "eafc").body


@pytest.fixture
def ex3():
    return parse_file(str(GOLDEN / "example3.afn"), "afn").body


@pytest.fixture
def ex4():
    return parse_file(str(GOLDEN / "example4.adf"), "adf").body


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
