import contextlib
import time

import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Time a block, record one PASS/FAIL line and enforce its time budget."""

    @contextlib.contextmanager
    def run(label, budget):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            over = elapsed > budget
            status = "PASS" if ok and not over else "FAIL"
            note = f" (over budget {budget:g}s)" if ok and over else ""
            line = f"{status}  criterion {label}  [{elapsed:.2f}s]{note}"
            _ACCEPTANCE_LINES.append(line)
            print(line)
        assert not over, f"criterion {label} took {elapsed:.2f}s, budget {budget:g}s"

    return run


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
