import time
from contextlib import contextmanager

import pytest

# (number, title, passed, seconds, limit) collected by the acceptance tests
CRITERIA: list = []


class _Criterion:
    def __init__(self, number, title, limit):
        self.number, self.title, self.limit = number, title, limit

    @contextmanager
    def timed(self):
        t0 = time.perf_counter()
        passed = False
        try:
            yield
            passed = True
        finally:
            dt = time.perf_counter() - t0
            ok = passed and (self.limit is None or dt < self.limit)
            CRITERIA.append((self.number, self.title, ok, dt, self.limit))
            status = "PASS" if ok else "FAIL"
            print(f"criterion {self.number:2d} {status} {self.title} ({dt:.2f}s)")
        if self.limit is not None:
            assert dt < self.limit, f"took {dt:.2f}s, limit {self.limit}s"


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, dt, limit in sorted(CRITERIA):
        lim = "" if limit is None else f" / {limit:g}s"
        terminalreporter.write_line(f"{number:2d} {'PASS' if ok else 'FAIL'}  {title}  ({dt:.2f}s{lim})")
