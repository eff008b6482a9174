import time
from contextlib import contextmanager

import pytest

_RESULTS: list[tuple[str, bool, str]] = []


@contextmanager
def _record(label: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        _RESULTS.append((label, False, f"{time.perf_counter() - start:.2f}s"))
        raise
    _RESULTS.append((label, True, f"{time.perf_counter() - start:.2f}s"))


@pytest.fixture
def criterion():
    """Context manager that logs one PASS/FAIL line per acceptance criterion."""
    return _record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, elapsed in _RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  [{elapsed}]")
