import time

import numpy as np
import pytest

from conjulin import _pykernels

try:
    from conjulin import _ckernels
except ImportError:  # extension not built
    _ckernels = None

SUITE_BUDGET_S = 30.0
ACCEPTANCE_LINES = []
_start = time.perf_counter()


def record_criterion(name, ok, detail=""):
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(params=["python", "cython"])
def kernels(request):
    if request.param == "cython":
        if _ckernels is None:
            pytest.skip("Cython extension not built")
        return _ckernels
    return _pykernels


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    elapsed = time.perf_counter() - _start
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
    ok = elapsed < SUITE_BUDGET_S
    terminalreporter.write_line(
        f"{'PASS' if ok else 'FAIL'}  criterion 7: full suite runtime {elapsed:.1f} s < {SUITE_BUDGET_S:.0f} s"
    )


def pytest_sessionfinish(session, exitstatus):
    if ACCEPTANCE_LINES and time.perf_counter() - _start >= SUITE_BUDGET_S and exitstatus == 0:
        session.exitstatus = 1
