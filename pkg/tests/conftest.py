"""Shared pytest plumbing: the acceptance-criteria summary.

test_acceptance.py records one verdict per shipped guarantee through
record_criterion; the hook below prints them after the run so the
PASS/FAIL lines survive output capture and land in logs.
"""

_CRITERIA: list[tuple[str, bool, str]] = []


def record_criterion(name: str, passed: bool, detail: str = "") -> None:
    _CRITERIA.append((name, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, passed, detail in _CRITERIA:
        line = f"{'PASS' if passed else 'FAIL'}  {name}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
