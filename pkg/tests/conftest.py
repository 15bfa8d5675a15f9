import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from civitas.alcuin import PROBLEMS, make_instance  # noqa: E402

_SUMMARY = []


def record(line: str) -> None:
    """Queue a line for the end-of-run summary and echo it now."""
    _SUMMARY.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _SUMMARY:
        terminalreporter.section("acceptance criteria")
        for line in _SUMMARY:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def instances():
    return {p: make_instance(p) for p in PROBLEMS}
