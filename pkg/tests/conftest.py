import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_line():
    """Record one PASS/FAIL line per acceptance criterion; echoed in the terminal summary."""

    def record(label: str, ok: bool, detail: str = "") -> bool:
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" -- {detail}" if detail else "")
        print(line)
        _ACCEPTANCE_LINES.append(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
