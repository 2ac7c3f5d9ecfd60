"""Shared pytest plumbing.

test_acceptance.py records one line per acceptance criterion through
criterion(); the lines are replayed in the terminal summary so a plain
`pytest -v` run always shows the full pass/fail scoreboard.
"""

CRITERIA_LINES = []


def criterion(number: int, ok: bool, detail: str) -> None:
    """Record and print one acceptance-criterion verdict, then enforce it."""
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    CRITERIA_LINES.append(line)
    print(line)
    assert ok, line


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not CRITERIA_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(CRITERIA_LINES):
        terminalreporter.write_line(line)
