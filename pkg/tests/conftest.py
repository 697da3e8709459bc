import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report():
    """Record a one-line PASS/FAIL verdict shown in the terminal summary."""
    def add(line: str):
        ACCEPTANCE_LINES.append(line)
        print(line)
    return add


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
