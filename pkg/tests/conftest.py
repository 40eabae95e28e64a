import pytest

_LINES = []


@pytest.fixture
def accept_log():
    """Collector for the one-line acceptance verdicts printed at the end."""
    def log(line):
        _LINES.append(line)
    return log


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance checks")
        for line in _LINES:
            terminalreporter.write_line(line)
