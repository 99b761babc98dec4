import pytest

RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def record():
    def _record(k: int, ok: bool, detail: str = "") -> None:
        RESULTS[k] = (ok, detail)
    return _record


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(RESULTS):
        ok, detail = RESULTS[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
