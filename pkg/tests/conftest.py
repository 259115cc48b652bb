import numpy as np
import pytest

from logitbands.data import bundled_lavelle_dataset
from logitbands.glm import Link, fit

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def lavelle():
    return bundled_lavelle_dataset()


@pytest.fixture(scope="session")
def lavelle_fit(lavelle):
    return fit(Link.LOGIT, lavelle)


@pytest.fixture(scope="session")
def lavelle_probit_fit(lavelle):
    return fit(Link.PROBIT, lavelle)


@pytest.fixture
def record():
    """Log one pass/fail line per acceptance criterion, then assert it."""

    def _record(criterion: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f": {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
