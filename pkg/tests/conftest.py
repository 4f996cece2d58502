"""Shared pytest wiring: the acceptance summary block.

Acceptance tests record one line per criterion through the `criterion`
fixture; the lines are replayed in the terminal summary so the verdict
is visible even when the individual tests pass silently.
"""

import pytest

_lines: list[str] = []


@pytest.fixture
def criterion():
    def note(name: str, ok: bool, detail: str = "") -> None:
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] {name}"
        if detail:
            line += f" ({detail})"
        _lines.append(line)
        assert ok, f"acceptance criterion failed: {name} {detail}"
    return note


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _lines:
        terminalreporter.section("acceptance criteria")
        for line in _lines:
            terminalreporter.write_line(line)
