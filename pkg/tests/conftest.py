"""Shared test plumbing.

The acceptance tests register one line per criterion; printing them from
a terminal-summary hook keeps them visible even though pytest captures
ordinary stdout of passing tests.
"""

ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
