"""Shared fixtures: the acceptance scoreboard printed after the run."""
from __future__ import annotations

import pytest


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def acceptance_report(request):
    """Record one PASS/FAIL line; all lines are echoed after the summary."""
    lines = request.config._acceptance_lines

    def report(num: int, ok: bool, desc: str) -> None:
        line = "ACCEPTANCE %2d: %s - %s" % (num, "PASS" if ok else "FAIL", desc)
        print(line)
        lines.append((num, line))
    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance scoreboard")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
