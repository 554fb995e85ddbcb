import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record():
    """Record one acceptance line; printed in the terminal summary."""

    def _record(criterion: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES.append(f"{criterion:<6} {'PASS' if ok else 'FAIL'}  {detail}")

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
