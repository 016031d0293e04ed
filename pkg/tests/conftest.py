import pytest

ACCEPTANCE = {}


@pytest.fixture
def record():
    """Store one acceptance line; the summary is printed at the end of the run."""

    def _record(number, title, ok, detail=""):
        ACCEPTANCE[(number, title)] = (ok, detail)
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[(number, title)]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:>2}. {title}: {detail}")
