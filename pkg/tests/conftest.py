import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> pathlib.Path:
    return FIXTURES


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion at the end of the run."""
    seen = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance" in rep.nodeid and rep.when == "call":
                seen[rep.nodeid.split("::")[-1]] = outcome
    if not seen:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(seen):
        status = "PASS" if seen[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
